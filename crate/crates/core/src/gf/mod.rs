//! Finite fields of small order and form-equipped linear algebra: the
//! substrate for projective and polar space construction.

pub mod field;
pub mod forms;
pub mod linalg;

pub use field::Field;
pub use forms::{Form, FormKind, QuadKind};
pub use linalg::{Matrix, Subspace};
