//! The four cyclic LRC families.
//!
//! | family  | zeros (exponents mod n)                  | r | t | k              |
//! |---------|------------------------------------------|---|---|----------------|
//! | `c1`    | multiples of r+1                         | r | 1 | rn/(r+1)       |
//! | `c2`    | multiples of 3, coset of 1               | 2 | 1 | 2n/3 - m       |
//! | `d10`   | multiples of 3, cosets of 1 and n-1      | 2 | 1 | 2n/3 - 2m      |
//! | `avail` | j with j mod 7 in {0, 3, 5, 6}           | 2 | 3 | 3n/7           |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::{CyclicCode, DefiningSet};
use crate::error::{Error, Result};
use crate::gf::GaloisField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    C1,
    C2,
    D10,
    Avail,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C1 => "c1",
            Family::C2 => "c2",
            Family::D10 => "d10",
            Family::Avail => "avail",
        })
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "c1" => Ok(Family::C1),
            "c2" => Ok(Family::C2),
            "d10" => Ok(Family::D10),
            "avail" => Ok(Family::Avail),
            other => Err(format!(
                "unknown family {other:?} (expected c1|c2|d10|avail)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum ClaimedDistance {
    Exact(usize),
    AtLeast(usize),
}

impl ClaimedDistance {
    pub fn value(self) -> usize {
        match self {
            ClaimedDistance::Exact(d) | ClaimedDistance::AtLeast(d) => d,
        }
    }
}

impl fmt::Display for ClaimedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimedDistance::Exact(d) => write!(f, "{d}"),
            ClaimedDistance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub family: Family,
    pub code: CyclicCode,
    pub locality_r: usize,
    pub availability_t: usize,
    pub claimed_distance: ClaimedDistance,
    pub claimed_dimension: usize,
}

fn multiples(n: usize, step: usize) -> impl Iterator<Item = usize> {
    (0..n / step).map(move |j| j * step)
}

fn require_even_m(m: u32) -> Result<()> {
    if !m.is_multiple_of(2) || m <= 2 {
        return Err(Error::RequiresEvenM);
    }
    Ok(())
}

/// Zeros at every multiple of `r + 1`; the dual is spanned by the shifts
/// of `Σ_{i≤r} x^{i n/(r+1)}`.
pub fn construction_1(m: u32, r: usize) -> Result<ConstructionResult> {
    if r % 2 == 1 {
        return Err(Error::OddLocality);
    }
    if r == 0 {
        return Err(Error::ZeroLocality);
    }
    let field = GaloisField::new(m)?;
    let n = field.order();
    if n % (r + 1) != 0 {
        return Err(Error::LocalityDoesNotDivide { n, r });
    }
    let zeros = DefiningSet::new(n, multiples(n, r + 1))?;
    let code = CyclicCode::new(field, zeros)?;
    Ok(ConstructionResult {
        family: Family::C1,
        claimed_dimension: r * n / (r + 1),
        code,
        locality_r: r,
        availability_t: 1,
        claimed_distance: ClaimedDistance::Exact(2),
    })
}

/// Construction 1 with r = 2 plus the coset of 1; BCH bound 6.
pub fn construction_2(m: u32) -> Result<ConstructionResult> {
    require_even_m(m)?;
    let field = GaloisField::new(m)?;
    let n = field.order();
    let zeros = DefiningSet::new(n, multiples(n, 3))?.union(&DefiningSet::from_cosets(n, [1]));
    let code = CyclicCode::new(field, zeros)?;
    Ok(ConstructionResult {
        family: Family::C2,
        claimed_dimension: 2 * n / 3 - m as usize,
        code,
        locality_r: 2,
        availability_t: 1,
        // Exactness is only asserted for the length-15 instance.
        claimed_distance: if m == 4 {
            ClaimedDistance::Exact(6)
        } else {
            ClaimedDistance::AtLeast(6)
        },
    })
}

/// Multiples of 3 plus the cosets of 1 and -1; BCH bound 10.
pub fn construction_d10(m: u32) -> Result<ConstructionResult> {
    require_even_m(m)?;
    let field = GaloisField::new(m)?;
    let n = field.order();
    let zeros =
        DefiningSet::new(n, multiples(n, 3))?.union(&DefiningSet::from_cosets(n, [1, n - 1]));
    let code = CyclicCode::new(field, zeros)?;
    Ok(ConstructionResult {
        family: Family::D10,
        claimed_dimension: 2 * n / 3 - 2 * m as usize,
        code,
        locality_r: 2,
        availability_t: 1,
        claimed_distance: ClaimedDistance::AtLeast(10),
    })
}

/// Zeros at `j` with `j mod 7 ∈ {0, 3, 5, 6}`, so `h(x) = 1 + y + y^3` with
/// `y = x^{n/7}`: a [7,4,3] Hamming generator spread across `n/7` classes.
pub fn construction_available(m: u32) -> Result<ConstructionResult> {
    if !m.is_multiple_of(3) {
        return Err(Error::RequiresMDivisibleBy3);
    }
    let field = GaloisField::new(m)?;
    let n = field.order();
    let zeros = DefiningSet::new(n, (0..n).filter(|j| matches!(j % 7, 0 | 3 | 5 | 6)))?;
    let code = CyclicCode::new(field, zeros)?;
    Ok(ConstructionResult {
        family: Family::Avail,
        claimed_dimension: 3 * n / 7,
        code,
        locality_r: 2,
        availability_t: 3,
        claimed_distance: ClaimedDistance::Exact(4),
    })
}

/// Dispatch by family; `r` only applies to `c1` (default 2).
pub fn construct(family: Family, m: u32, r: Option<usize>) -> Result<ConstructionResult> {
    match family {
        Family::C1 => construction_1(m, r.unwrap_or(2)),
        Family::C2 => construction_2(m),
        Family::D10 => construction_d10(m),
        Family::Avail => construction_available(m),
    }
}
