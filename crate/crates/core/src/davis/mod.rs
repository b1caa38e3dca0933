//! Finite balls in the Davis complex, realised as order complexes of the
//! poset of spherical cosets `wW_T`.

mod ball;
mod chamber;
mod fixed;

pub use ball::{davis_ball, CosetJson, DavisBall, DavisBallJson, SphericalCoset};
pub use chamber::{chamber, Chamber, CHAMBER_APEX};
pub use fixed::{dim_of, fixed_subcomplex, hash_union_sharp, singular_subcomplex};
