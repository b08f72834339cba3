//! Finite presentations of Artin type with triangle relations, their
//! abelianizations, and the section of the cusp family into `V^k`.
//!
//! Presentations are data only; no word problem is solved.

use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::algebra::{smith_normal_form, IntMatrix, Rat};
use crate::curves::TrigonalForm;
use crate::error::{Error, Result};

/// Signed generator indices, 1-based; `-i` is the inverse of `t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<i64>);

impl Word {
    pub fn new(letters: Vec<i64>, n_generators: usize) -> Result<Word> {
        if let Some(bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > n_generators)
        {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} outside 1..={n_generators}"
            )));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent sum of each generator.
    pub fn exponent_vector(&self, n_generators: usize) -> Vec<i64> {
        let mut v = vec![0; n_generators];
        for &l in &self.0 {
            v[l.unsigned_abs() as usize - 1] += l.signum();
        }
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Discriminant knot group of `y^3 + x^n`.
    PiK { n: usize },
    /// Conjectured group for the `(4k, 2k)` stratum.
    Conjecture4k2k { k: usize },
    /// No family: relations supplied by the caller.
    Custom,
}

impl Family {
    /// Only `n = 3k + 2` has an explicitly known presentation; other `n`
    /// reuse the same pattern.
    pub fn is_conjectural(self) -> bool {
        match self {
            Family::PiK { n } => n % 3 != 2,
            Family::Conjecture4k2k { .. } => true,
            Family::Custom => false,
        }
    }

    pub fn label(self) -> String {
        match self {
            Family::PiK { n } if n % 3 == 2 => format!("piK(y^3+x^{n})"),
            Family::PiK { n } => format!("piK(y^3+x^{n}) pattern-extrapolated"),
            Family::Conjecture4k2k { k } => format!("conjecture-4k2k(k={k})"),
            Family::Custom => "custom".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n_generators: usize,
    relations: Vec<(Word, Word)>,
    family: Family,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationCounts {
    pub braid: usize,
    pub commutation: usize,
    pub triangle: usize,
}

impl Presentation {
    pub fn new(n_generators: usize, relations: Vec<(Word, Word)>, family: Family) -> Result<Presentation> {
        for (l, r) in &relations {
            Word::new(l.0.clone(), n_generators)?;
            Word::new(r.0.clone(), n_generators)?;
        }
        Ok(Presentation {
            n_generators,
            relations,
            family,
        })
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Counts relations by shape: braid `aba = bab`, commutation `ab = ba`,
    /// triangle `abca = bcab`.
    pub fn relation_counts(&self) -> RelationCounts {
        let mut c = RelationCounts::default();
        for (l, r) in &self.relations {
            match (l.len(), r.len()) {
                (3, 3) => c.braid += 1,
                (2, 2) => c.commutation += 1,
                (4, 4) => c.triangle += 1,
                _ => {}
            }
        }
        c
    }

    /// One row per relation: exponent vector of `left - right`.
    pub fn relation_matrix(&self) -> Result<IntMatrix> {
        let rows: Vec<Vec<i64>> = self
            .relations
            .iter()
            .map(|(l, r)| {
                let a = l.exponent_vector(self.n_generators);
                let b = r.exponent_vector(self.n_generators);
                a.iter().zip(&b).map(|(x, y)| x - y).collect()
            })
            .collect();
        IntMatrix::from_rows(&rows, self.n_generators)
    }
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            generators: usize,
            family: String,
            conjectural: bool,
            relations: &'a [(Word, Word)],
        }
        Raw {
            generators: self.n_generators,
            family: self.family.label(),
            conjectural: self.family.is_conjectural(),
            relations: &self.relations,
        }
        .serialize(s)
    }
}

fn word(letters: &[usize]) -> Word {
    Word(letters.iter().map(|&l| l as i64).collect())
}

/// Braid relations for `1 <= |i-j| <= 2`, commutations for `|i-j| > 2`,
/// and triangle relations `t_i t_(i+1) t_(i+2) t_i = t_(i+1) t_(i+2) t_i t_(i+1)`
/// for `i + 2 <= n`.
fn triangle_artin_relations(n: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if j - i <= 2 {
                out.push((word(&[i, j, i]), word(&[j, i, j])));
            }
        }
    }
    for i in 1..=n {
        for j in i + 3..=n {
            out.push((word(&[i, j]), word(&[j, i])));
        }
    }
    for i in 1..=n.saturating_sub(2) {
        out.push((word(&[i, i + 1, i + 2, i]), word(&[i + 1, i + 2, i, i + 1])));
    }
    out
}

/// Presentation on `2(n-1)` generators for the discriminant knot group of
/// `y^3 + x^n`.
pub fn build_pik(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let gens = 2 * (n - 1);
    Presentation::new(gens, triangle_artin_relations(gens), Family::PiK { n })
}

/// Conjectured presentation on `6k+3` generators.
pub fn build_conjecture_4k2k(k: usize) -> Result<Presentation> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let gens = 6 * k + 3;
    Presentation::new(gens, triangle_artin_relations(gens), Family::Conjecture4k2k { k })
}

/// `(t_1 ... t_(6k+2))^(9k+6)`.
pub fn central_word(k: usize) -> Word {
    let cycle: Vec<i64> = (1..=6 * k as i64 + 2).collect();
    Word(cycle.repeat(9 * k + 6))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Abelianization {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<u64>,
}

pub fn abelianization(p: &Presentation) -> Result<Abelianization> {
    let snf = smith_normal_form(&p.relation_matrix()?);
    let rank = snf.rank();
    let torsion = snf
        .diagonal
        .iter()
        .take(rank)
        .map(|d| d.magnitude().clone())
        .filter(|d| !d.is_one())
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| Error::Internal(format!("invariant factor {d} exceeds u64")))
        })
        .collect::<Result<Vec<u64>>>()?;
    Ok(Abelianization {
        free_rank: p.n_generators - rank,
        torsion,
    })
}

/// `y^3 + p x^(2k+2) y + q x^(3k+3) + 1`.
pub fn section_embedding(k: usize, p: &Rat, q: &Rat) -> Result<TrigonalForm> {
    let mut f = TrigonalForm::zero(k)?;
    f.set(0, 3, Rat::one())?;
    f.set(2 * k + 2, 1, p.clone())?;
    f.set(3 * k + 3, 0, q.clone())?;
    f.set(0, 0, Rat::one())?;
    Ok(f)
}

/// `4p^3 + 27q^2 != 0`.
pub fn cusp_discriminant_ok(p: &Rat, q: &Rat) -> bool {
    let d = Rat::from_int(4) * p.pow(3) + Rat::from_int(27) * q * q;
    !d.is_zero()
}
