//! Moufang loops, groups with triality, Malcev algebras and the Hopf
//! algebras that carry a triality action, all over exact rationals.

pub mod qcore;
pub mod loops;
pub mod malcev;
pub mod autotopy;
pub mod gtriality;
pub mod hopf;
pub mod envelope;
pub mod conv;
pub mod sampling;
