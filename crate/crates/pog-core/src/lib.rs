//! Preordered groups: positive cones, torsion and pretorsion theories,
//! factorization systems and coverings, computed exactly on finite groups
//! and finitely generated abelian groups.

pub mod cone;
pub mod descent;
pub mod factor;
pub mod fixtures;
pub mod group;
pub mod oracle;
pub mod preord;
pub mod torsion;
