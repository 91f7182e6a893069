//! Substitution maps `y_i ↦ f_i` given by same-degree homogeneous forms, and
//! the pushforward of ideals along them.

use crate::error::{Error, Result};
use crate::polyring::{Homogeneity, PolyRing, Polynomial};

use super::{raw_dimension, Ideal};

/// The ring map `φ: y_i ↦ f_i`. Only maps whose images were verified to form
/// a regular sequence may be used for [`pushforward`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionMap {
    source: PolyRing,
    target: PolyRing,
    images: Vec<Polynomial>,
    degree: u32,
    regular_verified: bool,
}

fn common_degree(fs: &[Polynomial]) -> Result<Option<u32>> {
    let mut degree = None;
    for f in fs {
        match f.homogeneity() {
            Homogeneity::Inhomogeneous => return Err(Error::NotHomogeneous),
            Homogeneity::Zero => return Ok(None),
            Homogeneity::Homogeneous(d) => match degree {
                None => degree = Some(d),
                Some(d0) if d0 != d => return Err(Error::DegreeMismatch(d0, d)),
                Some(_) => {}
            },
        }
    }
    Ok(degree)
}

impl SubstitutionMap {
    /// Validates shape only; call [`SubstitutionMap::verify`] before use.
    pub fn new(source: &PolyRing, images: Vec<Polynomial>) -> Result<Self> {
        let n = source.nvars();
        if images.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: images.len() });
        }
        let target = images[0].ring().clone();
        for f in &images {
            target.check(f.ring())?;
        }
        if target.nvars() != n {
            return Err(Error::ArityMismatch { expected: n, found: target.nvars() });
        }
        if target.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        let degree = common_degree(&images)?
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::InvalidParameter("images must be forms of positive degree".into()))?;
        if images.iter().any(Polynomial::is_zero) {
            return Err(Error::InvalidParameter("images must be nonzero".into()));
        }
        Ok(SubstitutionMap { source: source.clone(), target, images, degree, regular_verified: false })
    }

    /// Checks that the images form a regular sequence.
    pub fn verify(mut self) -> Result<Self> {
        if !is_regular_sequence(&self.images)? {
            return Err(Error::NotRegularSequence);
        }
        self.regular_verified = true;
        Ok(self)
    }

    /// [`SubstitutionMap::new`] followed by [`SubstitutionMap::verify`].
    pub fn verified(source: &PolyRing, images: Vec<Polynomial>) -> Result<Self> {
        Self::new(source, images)?.verify()
    }

    pub fn identity(ring: &PolyRing) -> Self {
        SubstitutionMap {
            source: ring.clone(),
            target: ring.clone(),
            images: ring.gens(),
            degree: 1,
            regular_verified: true,
        }
    }

    pub fn source(&self) -> &PolyRing {
        &self.source
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// The common degree `d` of the images.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_verified(&self) -> bool {
        self.regular_verified
    }

    /// `φ(f)`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.source.check(f.ring())?;
        f.substitute(&self.images)
    }
}

/// Whether `n + 1` same-degree forms in `n + 1` variables form a regular
/// sequence, i.e. whether they cut out only the origin.
pub fn is_regular_sequence(fs: &[Polynomial]) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Err(Error::ArityMismatch { expected: 1, found: 0 });
    };
    let ring = first.ring();
    if fs.len() != ring.nvars() {
        return Err(Error::ArityMismatch { expected: ring.nvars(), found: fs.len() });
    }
    for f in fs {
        ring.check(f.ring())?;
    }
    if common_degree(fs)?.is_none() {
        return Ok(false);
    }
    let ideal = Ideal::new(ring, fs.iter().cloned())?;
    Ok(raw_dimension(&ideal) == Some(0))
}

/// `φ_*(I)`: the ideal generated by the images of the generators of `I`.
pub fn pushforward(ideal: &Ideal, phi: &SubstitutionMap) -> Result<Ideal> {
    if !phi.regular_verified {
        return Err(Error::UnverifiedMap);
    }
    phi.source.check(&ideal.ring)?;
    let gens = ideal.generators.iter().map(|g| g.substitute(&phi.images)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&phi.target, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::expr::parse_polynomial_list;
    use crate::idealops::{degree, ideal_power, saturation};

    fn ring() -> PolyRing {
        PolyRing::grevlex(FieldSpec::prime(9001).unwrap(), ["x", "y", "z"]).unwrap()
    }

    fn forms(r: &PolyRing, s: &str) -> Vec<Polynomial> {
        parse_polynomial_list(s, r).unwrap()
    }

    #[test]
    fn regular_sequences() {
        let r = ring();
        assert!(is_regular_sequence(&forms(&r, "x^2; y^2; z^2")).unwrap());
        assert!(is_regular_sequence(&forms(&r, "x^2 + y^2; y^2 + z^2; x^2 + z^2")).unwrap());
        assert!(!is_regular_sequence(&forms(&r, "x; y; x + y")).unwrap());
        assert_eq!(
            is_regular_sequence(&forms(&r, "x; y")).unwrap_err(),
            Error::ArityMismatch { expected: 3, found: 2 }
        );
        assert_eq!(is_regular_sequence(&forms(&r, "x; y^2; z")).unwrap_err(), Error::DegreeMismatch(1, 2));
        assert_eq!(is_regular_sequence(&forms(&r, "x; y + 1; z")).unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn unverified_maps_are_rejected() {
        let r = ring();
        let phi = SubstitutionMap::new(&r, forms(&r, "x^2; y^2; z^2")).unwrap();
        let i = Ideal::new(&r, forms(&r, "x*y")).unwrap();
        assert_eq!(pushforward(&i, &phi).unwrap_err(), Error::UnverifiedMap);
        assert_eq!(
            SubstitutionMap::verified(&r, forms(&r, "x; y; x - y")).unwrap_err(),
            Error::NotRegularSequence
        );
    }

    #[test]
    fn identity_and_fermat_pushforward() {
        let r = ring();
        let i = Ideal::new(&r, forms(&r, "x*(y^3 - z^3); y*(x^3 - z^3); z*(x^3 - y^3)")).unwrap();
        let id = SubstitutionMap::identity(&r);
        assert!(pushforward(&i, &id).unwrap().equals(&i).unwrap());

        let phi = SubstitutionMap::verified(&r, forms(&r, "x^2 + y^2; y^2 + z^2; x^2 + z^2")).unwrap();
        let pushed = pushforward(&i, &phi).unwrap();
        let expected = Ideal::new(
            &r,
            forms(
                &r,
                "(x^2+y^2)*((y^2+z^2)^3 - (x^2+z^2)^3); \
                 (y^2+z^2)*((x^2+y^2)^3 - (x^2+z^2)^3); \
                 (x^2+z^2)*((x^2+y^2)^3 - (y^2+z^2)^3)",
            ),
        )
        .unwrap();
        assert_eq!(pushed.generators(), expected.generators());

        // multiplicativity: φ*(I^2) = φ*(I)^2
        let lhs = pushforward(&ideal_power(&i, 2).unwrap(), &phi).unwrap();
        assert!(lhs.equals(&ideal_power(&pushed, 2).unwrap()).unwrap());

        let h = degree(&saturation(&pushed).unwrap()).unwrap();
        assert_eq!((h.krull_dimension, h.multiplicity), (1, 48));
    }
}
