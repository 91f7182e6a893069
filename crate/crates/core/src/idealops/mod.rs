//! Ideals and their algebra: sums, products, powers, intersections, colons,
//! saturation, Hilbert data, and pushforward along substitution maps.

mod hilbert;
mod maps;
mod saturation;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::polyring::{PolyRing, Polynomial};

pub use maps::{is_regular_sequence, pushforward, SubstitutionMap};
pub use saturation::{
    colon, colon_principal, intersect, saturate, saturate_by_colon, saturation, saturation_by_aux_variable,
};

/// An ideal given by nonzero generators, with a lazily computed reduced
/// Gröbner basis shared between clones.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    basis: Arc<OnceLock<GroebnerBasis>>,
}

impl Ideal {
    /// Builds the ideal generated by `generators`. Zero generators and exact
    /// duplicates are dropped; the zero ideal itself is rejected.
    pub fn new(ring: &PolyRing, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            ring.check(g.ring())?;
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal { ring: ring.clone(), generators: gens, homogeneous, basis: Arc::new(OnceLock::new()) })
    }

    pub fn principal(f: Polynomial) -> Result<Self> {
        let ring = f.ring().clone();
        Self::new(&ring, [f])
    }

    /// The ideal generated by a reduced basis, with the basis pre-cached.
    pub(crate) fn from_basis(basis: GroebnerBasis) -> Result<Self> {
        let ideal = Self::new(basis.ring(), basis.elements().iter().cloned())?;
        ideal.basis.set(basis).expect("fresh cache");
        Ok(ideal)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Reduced Gröbner basis in the ring's order, computed on first use.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.basis.get_or_init(|| {
            buchberger(&self.ring, &self.generators).expect("generators live in the ideal's ring")
        })
    }

    pub fn has_cached_basis(&self) -> bool {
        self.basis.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Polynomial::is_constant) || self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check(f.ring())?;
        self.groebner_basis().contains(f)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by comparing reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.ring.check(&other.ring)?;
        Ok(self.groebner_basis().elements() == other.groebner_basis().elements())
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

pub fn ideal_member(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    ideal.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring.check(&b.ring)?;
    Ideal::new(&a.ring, a.generators.iter().chain(&b.generators).cloned())
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ring.check(&b.ring)?;
    let mut gens = Vec::with_capacity(a.generators.len() * b.generators.len());
    for f in &a.generators {
        for g in &b.generators {
            gens.push(f.mul(g)?);
        }
    }
    Ideal::new(&a.ring, gens)
}

/// `I^m`, generated by all products of `m` generators taken with repetition.
pub fn ideal_power(ideal: &Ideal, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Err(Error::InvalidExponent(0));
    }
    let gens = &ideal.generators;
    // level[k] holds the products whose largest factor index is k
    let mut level: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    for _ in 1..m {
        let mut next: Vec<Vec<Polynomial>> = vec![Vec::new(); gens.len()];
        for (k, g) in gens.iter().enumerate() {
            for products in &level[..=k] {
                for p in products {
                    next[k].push(p.mul(g)?);
                }
            }
        }
        level = next;
    }
    Ideal::new(&ideal.ring, level.into_iter().flatten())
}

/// The irrelevant ideal `𝔪 = (y_0, …, y_n)`.
pub fn irrelevant_ideal(ring: &PolyRing) -> Ideal {
    Ideal::new(ring, ring.gens()).expect("variables are nonzero")
}

/// Hilbert-series data of `S / I` for a homogeneous ideal `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Krull dimension of the quotient (1 for points of the projective plane).
    pub krull_dimension: usize,
    /// Multiplicity (degree): the number of points counted with multiplicity
    /// when the dimension is 1.
    pub multiplicity: u64,
    /// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^(n+1)`.
    pub numerator: Vec<i64>,
}

fn require_homogeneous_proper(ideal: &Ideal) -> Result<()> {
    if !ideal.homogeneous {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Krull dimension of `S / I`, from maximal independent sets of variables
/// of the leading-monomial ideal.
pub fn krull_dim(ideal: &Ideal) -> Result<usize> {
    require_homogeneous_proper(ideal)?;
    Ok(raw_dimension(ideal).expect("proper ideal"))
}

/// Dimension of the quotient without the homogeneity guard; `None` for the
/// unit ideal.
pub fn raw_dimension(ideal: &Ideal) -> Option<usize> {
    hilbert::independent_set_dimension(&ideal.groebner_basis().leading_monomials(), ideal.ring.nvars())
}

/// Dimension and multiplicity from the Hilbert series of the leading-monomial
/// ideal.
pub fn degree(ideal: &Ideal) -> Result<HilbertData> {
    require_homogeneous_proper(ideal)?;
    let numerator = hilbert::hilbert_numerator(&ideal.groebner_basis().leading_monomials());
    let (k, q) = hilbert::split_one_minus_t(numerator.clone()).expect("proper ideal");
    let multiplicity: i64 = q.iter().sum();
    debug_assert!(multiplicity > 0);
    Ok(HilbertData { krull_dimension: ideal.ring.nvars() - k, multiplicity: multiplicity as u64, numerator })
}
