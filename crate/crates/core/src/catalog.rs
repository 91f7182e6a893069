//! Named point configurations, their witnesses, and the substitution maps
//! used to fiber them.
//!
//! All ideals live in three variables; the ring's own variable names are used,
//! playing the roles of `x`, `y`, `z` in order.

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::expr::parse_polynomial;
use crate::idealops::{pushforward, Ideal, SubstitutionMap};
use crate::polyring::{PolyRing, Polynomial};

/// A configuration ideal with its expected invariants.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub ideal: Ideal,
    /// A polynomial in `I^(m)` but not in `I^r`, with `(m, r)` alongside.
    pub witness: Option<(Polynomial, u32, u32)>,
    /// Degree of the saturated ideal: the number of points with multiplicity.
    pub expected_multiplicity: Option<u64>,
    /// Required field characteristic, if any.
    pub required_characteristic: Option<u32>,
    /// Non-fatal remarks, e.g. a characteristic the configuration is not meant for.
    pub warnings: Vec<String>,
}

/// Static information for listing the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogInfo {
    pub syntax: &'static str,
    pub kind: &'static str,
    pub description: &'static str,
    pub field: &'static str,
}

pub const CATALOG: &[CatalogInfo] = &[
    CatalogInfo {
        syntax: "@cehh",
        kind: "ideal",
        description: "(xy^2, yz^2, zx^2, xyz) = (x^2,y) ∩ (y^2,z) ∩ (z^2,x): three double points; witness x^2y^2z^2 in I^(3) \\ mI^2",
        field: "any",
    },
    CatalogInfo {
        syntax: "@fermat(j)",
        kind: "ideal",
        description: "(x(y^j-z^j), y(x^j-z^j), z(x^j-y^j)), j >= 3: j^2+3 points; witness (x^j-y^j)(x^j-z^j)(y^j-z^j) in I^(3) \\ I^2",
        field: "characteristic not 2 or 3",
    },
    CatalogInfo {
        syntax: "@char3",
        kind: "ideal",
        description: "the 13 points of P^2(GF(3)) minus one: 12 points; witness of degree 9 in I^(3) \\ I^2",
        field: "GF(3)",
    },
    CatalogInfo {
        syntax: "@ex1",
        kind: "map",
        description: "x -> x^2+y^2, y -> y^2+z^2, z -> x^2+z^2",
        field: "characteristic not 2",
    },
    CatalogInfo {
        syntax: "@ex2",
        kind: "map",
        description: "x -> x^2, y -> y^2, z -> z^2",
        field: "any",
    },
    CatalogInfo {
        syntax: "@ex4",
        kind: "map",
        description: "x -> x^2, y -> y^2, z -> z^2 (for @char3)",
        field: "GF(3)",
    },
    CatalogInfo {
        syntax: "@ex4b",
        kind: "map",
        description: "x -> x^2+y^2, y -> y^2+z^2, z -> x^2+z^2 (for @char3)",
        field: "GF(3)",
    },
];

fn require_plane(ring: &PolyRing) -> Result<()> {
    if ring.nvars() != 3 {
        return Err(Error::ArityMismatch { expected: 3, found: ring.nvars() });
    }
    Ok(())
}

/// Parses `text`, written in `x, y, z`, into `ring` (whose variables may be
/// named differently).
fn poly_in(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    let xyz = PolyRing::grevlex(*ring.field(), ["x", "y", "z"])?;
    Ok(parse_polynomial(text, &xyz)?.remap(ring, Some))
}

fn ideal_in(ring: &PolyRing, gens: &[&str]) -> Result<Ideal> {
    Ideal::new(ring, gens.iter().map(|g| poly_in(ring, g)).collect::<Result<Vec<_>>>()?)
}

fn require_characteristic(ring: &PolyRing, p: u32) -> Result<()> {
    let found = ring.field().characteristic();
    if found != p {
        return Err(Error::CharacteristicMismatch {
            found,
            requirement: format!("characteristic {p} required"),
        });
    }
    Ok(())
}

/// `(xy², yz², zx², xyz)`.
pub fn cehh_ideal(ring: &PolyRing) -> Result<CatalogEntry> {
    require_plane(ring)?;
    Ok(CatalogEntry {
        name: "cehh".into(),
        description: "three double points (x^2,y) ∩ (y^2,z) ∩ (z^2,x)".into(),
        ideal: ideal_in(ring, &["x*y^2", "y*z^2", "z*x^2", "x*y*z"])?,
        witness: Some((poly_in(ring, "x^2*y^2*z^2")?, 3, 3)),
        // each (x^2, y)-type scheme has length 2
        expected_multiplicity: Some(6),
        required_characteristic: None,
        warnings: Vec::new(),
    })
}

/// `(x(y^j − z^j), y(x^j − z^j), z(x^j − y^j))` for `j ≥ 3`.
pub fn fermat_ideal(ring: &PolyRing, j: u32) -> Result<CatalogEntry> {
    require_plane(ring)?;
    if j < 3 {
        return Err(Error::InvalidParameter(format!("Fermat exponent must be at least 3, got {j}")));
    }
    let mut warnings = Vec::new();
    let p = ring.field().characteristic();
    if p == 2 || p == 3 {
        warnings.push(format!(
            "characteristic {p}: the Fermat configuration is only claimed for characteristic not 2 or 3"
        ));
    }
    let gens = [format!("x*(y^{j} - z^{j})"), format!("y*(x^{j} - z^{j})"), format!("z*(x^{j} - y^{j})")];
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    let witness = format!("(x^{j} - y^{j})*(x^{j} - z^{j})*(y^{j} - z^{j})");
    Ok(CatalogEntry {
        name: format!("fermat({j})"),
        description: format!("Fermat configuration of {} points", j * j + 3),
        ideal: ideal_in(ring, &gens)?,
        witness: Some((poly_in(ring, &witness)?, 3, 2)),
        expected_multiplicity: Some((j * j + 3) as u64),
        required_characteristic: None,
        warnings,
    })
}

/// Twelve of the thirteen `GF(3)`-points of the plane, cut out by
/// `(xy(x²−y²), xz(x²−z²), yz(y²−z²), x(x²−y²)(x²−z²))`.
pub fn char3_ideal(ring: &PolyRing) -> Result<CatalogEntry> {
    require_plane(ring)?;
    require_characteristic(ring, 3)?;
    Ok(CatalogEntry {
        name: "char3".into(),
        description: "12 of the 13 GF(3)-points of the projective plane".into(),
        ideal: ideal_in(
            ring,
            &["x*y*(x^2 - y^2)", "x*z*(x^2 - z^2)", "y*z*(y^2 - z^2)", "x*(x^2 - y^2)*(x^2 - z^2)"],
        )?,
        witness: Some((
            poly_in(ring, "x*(x - z)*(x + z)*(x^2 - y^2)*((x - z)^2 - y^2)*((x + z)^2 - y^2)")?,
            3,
            2,
        )),
        expected_multiplicity: Some(12),
        required_characteristic: Some(3),
        warnings: Vec::new(),
    })
}

/// One of the named substitution maps, verified as a regular sequence.
pub fn paper_map(name: &str, ring: &PolyRing) -> Result<SubstitutionMap> {
    require_plane(ring)?;
    let images: &[&str] = match name {
        "ex1" => &["x^2 + y^2", "y^2 + z^2", "x^2 + z^2"],
        "ex2" => &["x^2", "y^2", "z^2"],
        "ex4" => {
            require_characteristic(ring, 3)?;
            &["x^2", "y^2", "z^2"]
        }
        "ex4b" => {
            require_characteristic(ring, 3)?;
            &["x^2 + y^2", "y^2 + z^2", "x^2 + z^2"]
        }
        other => return Err(Error::UnknownName(format!("@{other}"))),
    };
    let images = images.iter().map(|f| poly_in(ring, f)).collect::<Result<Vec<_>>>()?;
    SubstitutionMap::verified(ring, images)
}

/// An ideal from the catalog by job-file name (`cehh`, `fermat`, `char3`).
pub fn catalog_entry(name: &str, arg: Option<u32>, ring: &PolyRing) -> Result<CatalogEntry> {
    match (name, arg) {
        ("cehh", None) => cehh_ideal(ring),
        ("fermat", Some(j)) => fermat_ideal(ring, j),
        ("char3", None) => char3_ideal(ring),
        _ => Err(Error::UnknownName(format!("@{name}"))),
    }
}

/// The fibered configuration `φ_*(I)`: multiplicity scales by `d²`, and the
/// witness is carried along by `φ`.
pub fn fibered_entry(base: &CatalogEntry, phi: &SubstitutionMap) -> Result<CatalogEntry> {
    let ideal = pushforward(&base.ideal, phi)?;
    let witness = match &base.witness {
        Some((w, m, r)) => Some((phi.apply(w)?, *m, *r)),
        None => None,
    };
    let d = phi.degree() as u64;
    Ok(CatalogEntry {
        name: format!("{}*", base.name),
        description: format!("fibered {} under a degree-{d} map", base.description),
        ideal,
        witness,
        expected_multiplicity: base.expected_multiplicity.map(|e| d * d * e),
        required_characteristic: base.required_characteristic,
        warnings: base.warnings.clone(),
    })
}

/// Every base entry that makes sense over `field`, in catalog order.
pub fn entries_for_field(field: FieldSpec) -> Result<Vec<CatalogEntry>> {
    let ring = PolyRing::grevlex(field, ["x", "y", "z"])?;
    let mut out = vec![cehh_ideal(&ring)?];
    if field.characteristic() == 3 {
        out.push(char3_ideal(&ring)?);
    } else if field.characteristic() != 2 {
        out.push(fermat_ideal(&ring, 3)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealops::{degree, ideal_power, ideal_product, intersect, irrelevant_ideal, saturation};
    use crate::symbolic::symbolic_power;

    fn ring(field: FieldSpec) -> PolyRing {
        PolyRing::grevlex(field, ["x", "y", "z"]).unwrap()
    }

    #[test]
    fn cehh_facts() {
        let r = ring(FieldSpec::rationals());
        let e = cehh_ideal(&r).unwrap();
        assert!(e.ideal.generators().iter().all(|g| g.total_degree() == Some(3) && g.is_homogeneous()));
        let (w, _, _) = e.witness.clone().unwrap();
        let sq = ideal_power(&e.ideal, 2).unwrap();
        assert!(sq.contains(&w).unwrap());
        assert!(!ideal_product(&irrelevant_ideal(&r), &sq).unwrap().contains(&w).unwrap());
        let parts = ["x^2; y", "y^2; z", "z^2; x"]
            .map(|s| Ideal::new(&r, crate::expr::parse_polynomial_list(s, &r).unwrap()).unwrap());
        let meet = intersect(&intersect(&parts[0], &parts[1]).unwrap(), &parts[2]).unwrap();
        assert!(meet.equals(&e.ideal).unwrap());
        assert_eq!(degree(&saturation(&e.ideal).unwrap()).unwrap().multiplicity, 6);
    }

    #[test]
    fn fermat_parameters() {
        let r = ring(FieldSpec::prime(9001).unwrap());
        assert!(matches!(fermat_ideal(&r, 2), Err(Error::InvalidParameter(_))));
        for j in [3, 4] {
            let e = fermat_ideal(&r, j).unwrap();
            let h = degree(&saturation(&e.ideal).unwrap()).unwrap();
            assert_eq!(Some(h.multiplicity), e.expected_multiplicity);
        }
        let r3 = ring(FieldSpec::prime(3).unwrap());
        assert_eq!(fermat_ideal(&r3, 3).unwrap().warnings.len(), 1);
    }

    #[test]
    fn char3_facts() {
        let r = ring(FieldSpec::prime(3).unwrap());
        let e = char3_ideal(&r).unwrap();
        let degs: Vec<u32> = e.ideal.generators().iter().map(|g| g.total_degree().unwrap()).collect();
        assert_eq!(degs, [4, 4, 4, 5]);
        let (w, _, _) = e.witness.clone().unwrap();
        assert!(symbolic_power(&e.ideal, 3).unwrap().contains(&w).unwrap());
        assert!(!ideal_power(&e.ideal, 2).unwrap().contains(&w).unwrap());
        assert_eq!(degree(&e.ideal).unwrap().multiplicity, 12);

        let q = ring(FieldSpec::rationals());
        assert!(matches!(char3_ideal(&q), Err(Error::CharacteristicMismatch { found: 0, .. })));
    }

    #[test]
    fn maps() {
        let r = ring(FieldSpec::prime(9001).unwrap());
        assert_eq!(paper_map("ex1", &r).unwrap().degree(), 2);
        assert!(paper_map("ex2", &r).unwrap().is_verified());
        assert!(matches!(paper_map("ex4", &r), Err(Error::CharacteristicMismatch { .. })));
        let r3 = ring(FieldSpec::prime(3).unwrap());
        assert!(paper_map("ex4b", &r3).unwrap().is_verified());
        let r2 = ring(FieldSpec::prime(2).unwrap());
        assert_eq!(paper_map("ex1", &r2).unwrap_err(), Error::NotRegularSequence);
    }

    #[test]
    fn fibered_multiplicities() {
        let r = ring(FieldSpec::prime(9001).unwrap());
        let base = fermat_ideal(&r, 3).unwrap();
        for name in ["ex1", "ex2"] {
            let fib = fibered_entry(&base, &paper_map(name, &r).unwrap()).unwrap();
            assert_eq!(fib.expected_multiplicity, Some(48));
            let h = degree(&saturation(&fib.ideal).unwrap()).unwrap();
            assert_eq!((h.krull_dimension, h.multiplicity), (1, 48));
        }
    }

    #[test]
    fn other_variable_names() {
        let r = PolyRing::grevlex(FieldSpec::rationals(), ["a", "b", "c"]).unwrap();
        assert_eq!(cehh_ideal(&r).unwrap().ideal.to_string(), "(a*b^2, b*c^2, a^2*c, a*b*c)");
        let four = PolyRing::grevlex(FieldSpec::rationals(), ["a", "b", "c", "d"]).unwrap();
        assert_eq!(cehh_ideal(&four).unwrap_err(), Error::ArityMismatch { expected: 3, found: 4 });
    }
}
