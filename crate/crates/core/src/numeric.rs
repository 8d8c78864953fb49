//! Scalar-generic kernels for the closed-form bound formulas.
//!
//! Each formula is written once over a generic [`Scalar`] so the same code
//! path serves exact rational evaluation (the normative lane, see
//! [`crate::Rational`]) and `f32`/`f64` evaluation for quick numeric display.
//! Floor/ceil steps are applied by the callers, on the exact lane only.

use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Scalar type the bound formulas are evaluated over: `Rational` for exact
/// arithmetic, `f32`/`f64` for approximate evaluation.
pub trait Scalar: Num + Signed + FromPrimitive + ToPrimitive + Clone + PartialOrd {}
impl<T: Num + Signed + FromPrimitive + ToPrimitive + Clone + PartialOrd> Scalar for T {}

/// Converts a vertex/edge count into the scalar domain.
pub fn scalar<T: Scalar>(v: usize) -> T {
    T::from_usize(v).expect("count representable in the scalar type")
}

/// (n + 2r) / (2(r + 1)) — dynamo lower bound for (2r+1)-regular graphs
/// with uniform threshold r + 1.
pub fn regular_odd_value<T: Scalar>(n: usize, r: usize) -> T {
    let two = scalar::<T>(2);
    (scalar::<T>(n) + two.clone() * scalar::<T>(r)) / (two * (scalar::<T>(r) + T::one()))
}

/// n·(1 − ε/t) — edge-density dynamo lower bound; may be negative.
pub fn density_value<T: Scalar>(n: usize, epsilon: T, t_min: usize) -> T {
    scalar::<T>(n) * (T::one() - epsilon / scalar::<T>(t_min))
}

/// (4(t − r + 1)n + (2r − t)²) / 8 — pre-floor value of the edge-dynamo
/// lower bound for r-regular graphs with minimum edge threshold t.
pub fn line_regular_value<T: Scalar>(n: usize, r: usize, t: usize) -> T {
    let (n, r, t) = (scalar::<T>(n), scalar::<T>(r), scalar::<T>(t));
    let linear = scalar::<T>(4) * (t.clone() - r.clone() + T::one()) * n;
    let square = scalar::<T>(2) * r - t;
    (linear + square.clone() * square) / scalar::<T>(8)
}

/// (n(2t − 2r + 2) + (2r − t)² − 4r + 2t) / 4 + ε — edge-dynamo lower bound
/// for r-regular bipartite graphs; `parity_bonus` selects ε ∈ {0, 1/4}
/// (1/4 exactly when n − 2r + t + 1 is even).
pub fn line_bipartite_value<T: Scalar>(n: usize, r: usize, t: usize, parity_bonus: bool) -> T {
    let two = scalar::<T>(2);
    let four = scalar::<T>(4);
    let (sn, sr, st) = (scalar::<T>(n), scalar::<T>(r), scalar::<T>(t));
    let linear = sn * (two.clone() * st.clone() - two.clone() * sr.clone() + two.clone());
    let square = two.clone() * sr.clone() - st.clone();
    let tail = square.clone() * square - four.clone() * sr + two * st;
    let base = (linear + tail) / four.clone();
    if parity_bonus {
        base + T::one() / four
    } else {
        base
    }
}

/// λ² / (2(n−k)β) — exponent magnitude of the McDiarmid tail bound.
pub fn tail_exponent<T: Scalar>(lambda: T, n_minus_k: usize, beta: T) -> T {
    lambda.clone() * lambda / (scalar::<T>(2) * scalar::<T>(n_minus_k) * beta)
}
