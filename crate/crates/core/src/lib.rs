//! Exact-arithmetic toolkit for odd-degree rational hypersurfaces.

pub mod exactalg;
pub mod families;
pub mod heights;
pub mod count;
pub mod mpoly;
pub mod verify;
