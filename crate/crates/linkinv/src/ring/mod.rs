//! Exact arithmetic in ℚ(q)[u^±1], u = q^β.

mod coeff;
mod ground;
mod laurent;
mod parse;
mod poly;
mod rational;

pub use coeff::Coeff;
pub use ground::{qfact, qint, quantum_factorial, quantum_int, Exponent, GroundElem};
pub use laurent::LaurentQ;
pub use parse::parse_ground;
pub use rational::RationalQ;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible by [beta]")]
    NotDivisible,
    #[error("element is not a unit")]
    NotInvertible,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// `q - q^-1`.
pub fn q_minus_qinv() -> LaurentQ {
    &LaurentQ::q_pow(1) - &LaurentQ::q_pow(-1)
}

/// `q^-1 - q`, the skein coefficient.
pub fn skein_z() -> LaurentQ {
    &LaurentQ::q_pow(-1) - &LaurentQ::q_pow(1)
}
