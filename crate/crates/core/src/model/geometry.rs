//! Edge geometries: fixed-length bump patterns.
//!
//! Bits are kept in side-local order. When two sides abut, position `i`
//! of one lines up with position `L + 1 - i` of the other, so the
//! compatibility test reverses its second operand.

use std::fmt;
use std::str::FromStr;

use super::ModelError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Geometry {
    len: usize,
    words: Vec<u64>,
    reversed: Vec<u64>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl Geometry {
    /// A geometry of length `len` with no bumps.
    pub fn flat(len: usize) -> Self {
        let n = word_count(len);
        Geometry {
            len,
            words: vec![0; n],
            reversed: vec![0; n],
        }
    }

    /// Builds a geometry from 1-based bump positions.
    pub fn from_positions(len: usize, positions: &[usize]) -> Result<Self, ModelError> {
        let mut g = Geometry::flat(len);
        for &p in positions {
            if p == 0 || p > len {
                return Err(ModelError::GeometryPosition { position: p, len });
            }
            g.set(p, true);
        }
        Ok(g)
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut g = Geometry::flat(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                g.set(i + 1, true);
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bump at 1-based position `pos`.
    pub fn bump(&self, pos: usize) -> bool {
        assert!(
            pos >= 1 && pos <= self.len,
            "geometry position out of range"
        );
        let i = pos - 1;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, pos: usize, value: bool) {
        assert!(
            pos >= 1 && pos <= self.len,
            "geometry position out of range"
        );
        let i = pos - 1;
        let r = self.len - pos;
        if value {
            self.words[i / 64] |= 1 << (i % 64);
            self.reversed[r / 64] |= 1 << (r % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
            self.reversed[r / 64] &= !(1 << (r % 64));
        }
    }

    pub fn bump_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// 1-based positions of all bumps, ascending.
    pub fn positions(&self) -> Vec<usize> {
        (1..=self.len).filter(|&p| self.bump(p)).collect()
    }

    /// Whether two abutting sides can sit together without colliding bumps.
    pub fn compatible(&self, other: &Geometry) -> Result<bool, ModelError> {
        if self.len != other.len {
            return Err(ModelError::GeometrySize {
                left: self.len,
                right: other.len,
            });
        }
        Ok(self.compatible_unchecked(other))
    }

    /// Same as [`Geometry::compatible`] for geometries already known to share a length.
    pub fn compatible_unchecked(&self, other: &Geometry) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.reversed)
            .all(|(a, b)| a & b == 0)
    }

    /// True when some bump faces its own mirror image.
    pub fn self_incompatible(&self) -> bool {
        !self.compatible_unchecked(self)
    }

    /// Bit string, position 1 first.
    pub fn to_bit_string(&self) -> String {
        (1..=self.len)
            .map(|p| if self.bump(p) { '1' } else { '0' })
            .collect()
    }

    /// Substring of the bit string for positions `from..=to`.
    pub fn slice_string(&self, from: usize, to: usize) -> String {
        (from..=to)
            .map(|p| if self.bump(p) { '1' } else { '0' })
            .collect()
    }
}

impl FromStr for Geometry {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(ModelError::GeometryString(other)),
            }
        }
        Ok(Geometry::from_bits(&bits))
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Geometry({})", self.to_bit_string())
    }
}
