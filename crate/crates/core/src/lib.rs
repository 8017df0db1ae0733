pub mod asm;
pub mod error;
pub mod perm;
pub mod poly;
pub mod groebner;
pub mod monomial;
pub mod ideal;
pub mod pipedream;
pub mod schubpoly;
pub mod decomp;
