//! Convex embeddings, tailored embeddings for a prescribed split, and the
//! rotating sweep over critical directions.

mod convex;
mod svg;
mod sweep;
mod tailored;

pub use convex::{
    anchor_points, anchors_fixed, convex_embedding, general_position_embedding, harmonic_residual_is_zero,
    in_general_position, integer_points, perturb, Coefficients, Embedding, Point, PERTURBATION_ATTEMPTS,
};
pub use svg::{render_svg, SvgOptions};
pub use sweep::{
    critical_directions, differs_by_adjacent_swap, gap_directions, projection_order, run_sweep, sweep_split,
    CriticalDirection, Direction, SweepRecord,
};
pub use tailored::{g_ceiling, initial_g, placement_holds, tailored_embedding, TailoredEmbedding};
