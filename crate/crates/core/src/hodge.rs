//! Hodge diamonds and the measures computed from them: the E-polynomial,
//! Poincaré polynomial, Betti numbers, Euler characteristic, and the
//! Hochschild polynomial via the HKR decomposition.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::{BiPoly, LaurentPoly};

/// The Hodge numbers `h^{p,q}` of a smooth projective variety of dimension `d`,
/// stored as the full `(d+1) × (d+1)` table.
///
/// Construction checks Hodge symmetry `h^{p,q} = h^{q,p}` and Serre duality
/// `h^{p,q} = h^{d-p,d-q}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HodgeDiamond {
    dimension: usize,
    entries: Vec<BigUint>,
}

impl HodgeDiamond {
    /// Builds a diamond from rows `table[p][q] = h^{p,q}`.
    pub fn new(table: Vec<Vec<BigUint>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidDiamond("empty table".into()));
        }
        if let Some(p) = table.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidDiamond(format!(
                "row {p} has length {} in a {n}x{n} table",
                table[p].len()
            )));
        }
        let dia = Self {
            dimension: n - 1,
            entries: table.into_iter().flatten().collect(),
        };
        dia.validate()?;
        Ok(dia)
    }

    /// Builds the diamond of dimension `d` with `h^{p,q} = f(p, q)`.
    pub fn from_fn(d: usize, mut f: impl FnMut(usize, usize) -> BigUint) -> Result<Self> {
        let table = (0..=d)
            .map(|p| (0..=d).map(|q| f(p, q)).collect())
            .collect();
        Self::new(table)
    }

    fn validate(&self) -> Result<()> {
        let d = self.dimension;
        for p in 0..=d {
            for q in 0..=d {
                let h = self.at(p, q);
                if h != self.at(q, p) {
                    return Err(Error::InvalidDiamond(format!(
                        "Hodge symmetry fails: h^{{{p},{q}}} = {h} but h^{{{q},{p}}} = {}",
                        self.at(q, p)
                    )));
                }
                if h != self.at(d - p, d - q) {
                    return Err(Error::InvalidDiamond(format!(
                        "Serre duality fails: h^{{{p},{q}}} = {h} but h^{{{},{}}} = {}",
                        d - p,
                        d - q,
                        self.at(d - p, d - q)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The diamond of a point.
    pub fn point() -> Self {
        Self {
            dimension: 0,
            entries: vec![BigUint::one()],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    fn at(&self, p: usize, q: usize) -> &BigUint {
        &self.entries[p * (self.dimension + 1) + q]
    }

    /// `h^{p,q}`, zero outside `0..=d`.
    pub fn h(&self, p: i64, q: i64) -> BigUint {
        let d = self.dimension as i64;
        if (0..=d).contains(&p) && (0..=d).contains(&q) {
            self.at(p as usize, q as usize).clone()
        } else {
            BigUint::zero()
        }
    }

    /// Rows `h^{p,·}`.
    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> + '_ {
        self.entries.chunks(self.dimension + 1)
    }

    /// True when every off-diagonal entry vanishes.
    pub fn is_hodge_tate(&self) -> bool {
        let d = self.dimension;
        (0..=d).all(|p| (0..=d).all(|q| p == q || self.at(p, q).is_zero()))
    }

    /// `Σ (-1)^{p+q} h^{p,q} x^p y^q`.
    pub fn e_polynomial(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (p, row) in self.rows().enumerate() {
            for (q, h) in row.iter().enumerate() {
                let mut c = BigInt::from(h.clone());
                if (p + q) % 2 == 1 {
                    c = -c;
                }
                out.add_term(p as i64, q as i64, c);
            }
        }
        out
    }

    /// `Σ_i dim HH_i · t^i` with `dim HH_i = Σ_{q-p=i} h^{p,q}`.
    pub fn hochschild_polynomial(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.rows().enumerate().flat_map(|(p, row)| {
            row.iter()
                .enumerate()
                .map(move |(q, h)| (q as i64 - p as i64, BigInt::from(h.clone())))
        }))
    }

    /// `b_m = Σ_{p+q=m} h^{p,q}` for `0 <= m <= 2d`.
    pub fn betti(&self, m: i64) -> Result<BigUint> {
        let d = self.dimension as i64;
        if !(0..=2 * d).contains(&m) {
            return Err(Error::Range(format!(
                "Betti index {m} outside 0..={}",
                2 * d
            )));
        }
        Ok((0.max(m - d)..=m.min(d)).map(|p| self.h(p, m - p)).sum())
    }

    /// All Betti numbers `b_0, …, b_{2d}`.
    pub fn betti_numbers(&self) -> Vec<BigUint> {
        (0..=2 * self.dimension as i64)
            .map(|m| self.betti(m).expect("index in range"))
            .collect()
    }

    /// `Σ_m b_m z^m`.
    pub fn poincare_polynomial(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.betti_numbers()
                .into_iter()
                .enumerate()
                .map(|(m, b)| (m as i64, BigInt::from(b))),
        )
    }

    /// `Σ_m (-1)^m b_m`.
    pub fn euler(&self) -> BigInt {
        self.betti_numbers()
            .into_iter()
            .enumerate()
            .map(|(m, b)| {
                if m % 2 == 0 {
                    BigInt::from(b)
                } else {
                    -BigInt::from(b)
                }
            })
            .sum()
    }

    /// Diamond of the product `self × other`.
    pub fn kunneth_product(&self, other: &HodgeDiamond) -> HodgeDiamond {
        let (da, db) = (self.dimension, other.dimension);
        let d = da + db;
        let mut entries = vec![BigUint::zero(); (d + 1) * (d + 1)];
        for p1 in 0..=da {
            for q1 in 0..=da {
                let a = self.at(p1, q1);
                if a.is_zero() {
                    continue;
                }
                for p2 in 0..=db {
                    for q2 in 0..=db {
                        entries[(p1 + p2) * (d + 1) + q1 + q2] += a * other.at(p2, q2);
                    }
                }
            }
        }
        HodgeDiamond {
            dimension: d,
            entries,
        }
    }

    /// Centred text layout: one line per cohomological degree `m = 0..2d`,
    /// entries `h^{p,q}` with `p - q` increasing left to right.
    pub fn render_text(&self) -> String {
        let d = self.dimension as i64;
        let width = self
            .entries
            .iter()
            .map(|h| h.to_string().len())
            .max()
            .unwrap_or(1);
        // Entries of one row sit two grid columns apart, so a grid column
        // must exceed half an entry for neighbours not to touch.
        let step = width / 2 + 1;
        let mut lines = Vec::with_capacity(2 * d as usize + 1);
        for m in 0..=2 * d {
            let mut line = String::new();
            for diff in -d..=d {
                let (p2, q2) = (m + diff, m - diff);
                if p2 % 2 != 0 || !(0..=2 * d).contains(&p2) || !(0..=2 * d).contains(&q2) {
                    continue;
                }
                let h = self.h(p2 / 2, q2 / 2).to_string();
                let offset = (diff + d) as usize * step;
                let pad = offset + (width - h.len()) / 2;
                while line.len() < pad {
                    line.push(' ');
                }
                line.push_str(&h);
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl fmt::Debug for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        f.debug_struct("HodgeDiamond")
            .field("dimension", &self.dimension)
            .field("hodge", &rows)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct DiamondRepr {
    dimension: usize,
    hodge: Vec<Vec<String>>,
}

/// `{"dimension": d, "hodge": [[h^{0,0}, h^{0,1}, …], …]}` with entries as
/// decimal strings.
impl Serialize for HodgeDiamond {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiamondRepr {
            dimension: self.dimension,
            hodge: self
                .rows()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HodgeDiamond {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = DiamondRepr::deserialize(d)?;
        let table = repr
            .hodge
            .iter()
            .map(|row| row.iter().map(|h| h.parse::<BigUint>()).collect())
            .collect::<std::result::Result<Vec<Vec<BigUint>>, _>>()
            .map_err(D::Error::custom)?;
        let dia = HodgeDiamond::new(table).map_err(D::Error::custom)?;
        if dia.dimension != repr.dimension {
            return Err(D::Error::custom("dimension does not match table size"));
        }
        Ok(dia)
    }
}
