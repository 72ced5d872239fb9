//! Exact commutative algebra over `k[x,y,z,w]` and a toolkit for rank-2
//! Horrocks monads on projective 3-space.

pub mod budget;
pub mod components;
pub mod error;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod monad;
pub mod poly;
pub mod sheafcoh;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, Fp, QQ};
pub use poly::{Monomial, MonomialOrder, Poly, Ring};
