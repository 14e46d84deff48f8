use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{FpPoly, PrimeField};
use crate::dynamics::{HomogMap, Mobius};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MapFamily {
    /// `x^d + Σ c_i x^i` with `c_i ∈ F_p[t]`; the resultant is 1.
    MonicPoly,
    /// A monic polynomial conjugated by a random word in translations,
    /// inversion and unit scalings.
    ConjugatedMonicPoly,
    /// Random forms kept only when the resultant is a nonzero constant.
    RejectionRandom,
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapFamily::MonicPoly => "monic",
            MapFamily::ConjugatedMonicPoly => "conjugated",
            MapFamily::RejectionRandom => "rejection",
        })
    }
}

impl FromStr for MapFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monic" => Ok(MapFamily::MonicPoly),
            "conjugated" => Ok(MapFamily::ConjugatedMonicPoly),
            "rejection" => Ok(MapFamily::RejectionRandom),
            other => Err(Error::InvalidArgument(format!("unknown map family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapGenSpec {
    pub family: MapFamily,
    pub p: u64,
    pub degree: usize,
    /// Bound on the t-degree of each coefficient.
    pub coeff_degree: usize,
    /// Number of Möbius generators in a conjugating word.
    pub conjugation_depth: usize,
    /// Attempts per map for the rejection family.
    pub rejection_cap: usize,
    pub seed: u64,
}

impl MapGenSpec {
    pub fn new(family: MapFamily, p: u64, degree: usize, coeff_degree: usize, seed: u64) -> Self {
        MapGenSpec {
            family,
            p,
            degree,
            coeff_degree,
            conjugation_depth: 2,
            rejection_cap: 10_000,
            seed,
        }
    }

    pub fn validate(&self) -> Result<PrimeField> {
        let field = PrimeField::new(self.p)?;
        if self.degree < 2 {
            return Err(Error::InvalidArgument(format!("degree {} < 2", self.degree)));
        }
        Ok(field)
    }
}

/// The generator for map `index`: stream `index` of the spec's seed, so
/// every map can be drawn independently of the others.
pub fn map_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_poly(rng: &mut impl Rng, field: PrimeField, max_degree: usize) -> FpPoly {
    let coeffs = (0..=max_degree).map(|_| rng.gen_range(0..field.p())).collect();
    FpPoly::new(field, coeffs)
}

fn random_monic(rng: &mut impl Rng, field: PrimeField, spec: &MapGenSpec) -> HomogMap {
    let d = spec.degree;
    let mut f = vec![FpPoly::one(field)];
    f.extend((0..d).map(|_| random_poly(rng, field, spec.coeff_degree)));
    let mut g = vec![FpPoly::zero(field); d];
    g.push(FpPoly::one(field));
    let map = HomogMap::from_polys(f, g).expect("monic polynomial maps are nondegenerate");
    assert!(map.resultant().is_unit(), "monic polynomial with non-unit resultant");
    map
}

fn random_mobius(rng: &mut impl Rng, field: PrimeField, coeff_degree: usize) -> Mobius {
    match rng.gen_range(0..3) {
        0 => Mobius::translation(random_poly(rng, field, coeff_degree.max(1))),
        1 => Mobius::inversion(field),
        _ => Mobius::scaling(field, rng.gen_range(1..field.p())).expect("unit"),
    }
}

/// Draws map `index` of the family described by `spec`.
pub fn gen_map(spec: &MapGenSpec, index: u64) -> Result<HomogMap> {
    let field = spec.validate()?;
    let mut rng = map_rng(spec.seed, index);
    match spec.family {
        MapFamily::MonicPoly => Ok(random_monic(&mut rng, field, spec)),
        MapFamily::ConjugatedMonicPoly => {
            let base = random_monic(&mut rng, field, spec);
            let word = (0..spec.conjugation_depth.max(1))
                .map(|_| random_mobius(&mut rng, field, spec.coeff_degree))
                .fold(Mobius::identity(field), |acc, m| acc.compose(&m));
            let map = base.conjugate(&word)?;
            assert!(map.bad_places().is_empty(), "conjugation introduced a bad place");
            Ok(map)
        }
        MapFamily::RejectionRandom => {
            let d = spec.degree;
            for _ in 0..spec.rejection_cap {
                let f = (0..=d)
                    .map(|_| random_poly(&mut rng, field, spec.coeff_degree))
                    .collect();
                let g = (0..=d)
                    .map(|_| random_poly(&mut rng, field, spec.coeff_degree))
                    .collect();
                if let Ok(map) = HomogMap::from_polys(f, g) {
                    if map.degree() == d && map.resultant().is_unit() {
                        return Ok(map);
                    }
                }
            }
            Err(Error::RejectionExhausted(spec.rejection_cap))
        }
    }
}

/// The first `count` maps of the family.
pub fn gen_maps(spec: &MapGenSpec, count: usize) -> Result<Vec<HomogMap>> {
    (0..count as u64).map(|i| gen_map(spec, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcfield::Place;

    #[test]
    fn monic_shape_and_determinism() {
        let spec = MapGenSpec::new(MapFamily::MonicPoly, 2, 2, 1, 7);
        let maps = gen_maps(&spec, 20).unwrap();
        for m in &maps {
            assert_eq!(m.degree(), 2);
            assert!(m.f()[0].is_one());
            assert_eq!(
                m.g(),
                &[FpPoly::zero(m.field()), FpPoly::zero(m.field()), FpPoly::one(m.field())]
            );
            assert!(m.f().iter().all(|c| c.degree_or_zero() <= 1));
            assert!(m.bad_places().is_empty());
        }
        assert_eq!(maps, gen_maps(&spec, 20).unwrap());
        assert_eq!(gen_map(&spec, 13).unwrap(), maps[13]);
    }

    #[test]
    fn conjugates_keep_good_reduction() {
        let spec = MapGenSpec::new(MapFamily::ConjugatedMonicPoly, 3, 3, 2, 11);
        for m in gen_maps(&spec, 30).unwrap() {
            assert!(m.resultant().is_unit());
            assert!(m.bad_places().is_empty());
        }
        let inv = HomogMap::parse_affine("x^2+t", PrimeField::new(2).unwrap())
            .unwrap()
            .conjugate(&Mobius::inversion(PrimeField::new(2).unwrap()))
            .unwrap();
        assert!(inv.bad_places().is_empty());
    }

    #[test]
    fn rejection_accepts_only_constant_resultants() {
        let spec = MapGenSpec::new(MapFamily::RejectionRandom, 2, 2, 1, 3);
        let maps = gen_maps(&spec, 10).unwrap();
        for m in &maps {
            assert!(m.resultant().is_one());
            for pi in ["t", "t+1", "t^2+t+1"] {
                assert!(m.has_good_reduction(&Place::parse(pi, m.field()).unwrap()));
            }
        }
        let mut tiny = spec.clone();
        tiny.coeff_degree = 6;
        tiny.rejection_cap = 1;
        let outcomes: Vec<_> = (0..20).map(|i| gen_map(&tiny, i)).collect();
        assert!(outcomes.iter().any(|r| r == &Err(Error::RejectionExhausted(1))));
    }

    #[test]
    fn invalid_specs() {
        assert!(gen_map(&MapGenSpec::new(MapFamily::MonicPoly, 4, 2, 1, 0), 0).is_err());
        assert!(gen_map(&MapGenSpec::new(MapFamily::MonicPoly, 2, 1, 1, 0), 0).is_err());
        assert_eq!("conjugated".parse::<MapFamily>(), Ok(MapFamily::ConjugatedMonicPoly));
    }
}
