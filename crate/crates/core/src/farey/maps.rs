//! Bijections and involutions of `F(B(2m), m)` and its halfsequences.

use super::neighbors::Side;
use super::{FareyError, Fraction, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Preserving,
    Reversing,
}

/// `h/k -> (k-h)/k`, the order-reversing involution of `F(B(2m), m)`.
pub fn reverse_involution(f: Fraction) -> Fraction {
    Fraction::reduce(f.den() - f.num(), f.den()).expect("k - h <= k")
}

fn image(num: i128, den: i128, f: Fraction, map: &'static str) -> Result<Fraction> {
    if num < 0 || den <= 0 || num > den {
        return Err(FareyError::OutsideDomain { fraction: f, map });
    }
    Fraction::reduce_signed(num, den)
}

/// Halfsequence of `F(B(2m), m)` to `F_m`.
pub fn map_half_to_fm(f: Fraction, side: Side, orientation: Orientation) -> Result<Fraction> {
    let (h, k) = (f.h(), f.k());
    match (side, orientation) {
        (Side::Left, Orientation::Preserving) => image(h, k - h, f, "h/k -> h/(k-h)"),
        (Side::Right, Orientation::Preserving) => image(2 * h - k, h, f, "h/k -> (2h-k)/h"),
        (Side::Left, Orientation::Reversing) => image(k - 2 * h, k - h, f, "h/k -> (k-2h)/(k-h)"),
        (Side::Right, Orientation::Reversing) => image(k - h, h, f, "h/k -> (k-h)/h"),
    }
}

/// `F_m` to a halfsequence of `F(B(2m), m)`; inverse of [`map_half_to_fm`]
/// with the same side and orientation.
pub fn map_fm_to_half(f: Fraction, side: Side, orientation: Orientation) -> Result<Fraction> {
    let (h, k) = (f.h(), f.k());
    match (side, orientation) {
        (Side::Left, Orientation::Preserving) => image(h, k + h, f, "h/k -> h/(k+h)"),
        (Side::Right, Orientation::Preserving) => image(k, 2 * k - h, f, "h/k -> k/(2k-h)"),
        (Side::Left, Orientation::Reversing) => image(k - h, 2 * k - h, f, "h/k -> (k-h)/(2k-h)"),
        (Side::Right, Orientation::Reversing) => image(k, k + h, f, "h/k -> k/(k+h)"),
    }
}

/// Order-reversing involution of one halfsequence: `h/k -> h/(3h-k)` on the
/// right (fixing 2/3), `h/k -> (k-2h)/(2k-3h)` on the left (fixing 1/3).
pub fn third_symmetry_involution(f: Fraction, side: Side) -> Result<Fraction> {
    let (h, k) = (f.h(), f.k());
    match side {
        Side::Right => image(h, 3 * h - k, f, "h/k -> h/(3h-k)"),
        Side::Left => image(k - 2 * h, 2 * k - 3 * h, f, "h/k -> (k-2h)/(2k-3h)"),
    }
}
