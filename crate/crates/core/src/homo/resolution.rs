use serde::Serialize;

use crate::repmod::{Module, Morphism};

/// A length that is either known or only known to exceed a search bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bounded {
    Finite(usize),
    Exceeds(usize),
}

impl Bounded {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bounded::Finite(n) => Some(n),
            Bounded::Exceeds(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bounded::Finite(_))
    }

    /// `Some(self <= n)` when decidable.
    pub fn at_most(self, n: usize) -> Option<bool> {
        match self {
            Bounded::Finite(m) => Some(m <= n),
            Bounded::Exceeds(b) if b >= n => Some(false),
            Bounded::Exceeds(_) => None,
        }
    }

    /// Maximum, treating `Exceeds(b)` as "greater than b".
    pub fn max(self, other: Bounded) -> Bounded {
        match (self, other) {
            (Bounded::Finite(a), Bounded::Finite(b)) => Bounded::Finite(a.max(b)),
            (Bounded::Exceeds(a), Bounded::Exceeds(b)) => Bounded::Exceeds(a.max(b)),
            // The maximum is at least b and above a.
            (Bounded::Exceeds(a), Bounded::Finite(b)) | (Bounded::Finite(b), Bounded::Exceeds(a)) => {
                Bounded::Exceeds(a.max(b.saturating_sub(1)))
            }
        }
    }
}

impl std::fmt::Display for Bounded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bounded::Finite(n) => write!(f, "{n}"),
            Bounded::Exceeds(b) => write!(f, "> {b}"),
        }
    }
}

/// `... -> P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Module,
    /// `P_0, P_1, ...`
    pub terms: Vec<Module>,
    /// `cover[i]: P_i -> Omega^i M`.
    pub covers: Vec<Morphism>,
    /// `Omega^0 = M, Omega^1, ...`; one more than `terms` unless it stopped at zero.
    pub syzygies: Vec<Module>,
    /// Inclusions `Omega^{i+1} -> P_i`.
    pub inclusions: Vec<Morphism>,
    pub length: Bounded,
}

/// `0 -> M -> I^0 -> I^1 -> ...`.
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub module: Module,
    pub terms: Vec<Module>,
    /// `hulls[i]: Omega^{-i} M -> I^i`.
    pub hulls: Vec<Morphism>,
    /// `Omega^0 = M, Omega^{-1}, ...`
    pub cosyzygies: Vec<Module>,
    /// Projections `I^i -> Omega^{-(i+1)}`.
    pub projections: Vec<Morphism>,
    pub length: Bounded,
}

/// Minimal projective resolution, computing `P_0, ..., P_bound`.
pub fn min_proj_resolution(m: &Module, bound: usize) -> Resolution {
    let mut res = Resolution {
        module: m.clone(),
        terms: Vec::new(),
        covers: Vec::new(),
        syzygies: vec![m.clone()],
        inclusions: Vec::new(),
        length: Bounded::Finite(0),
    };
    if m.is_zero() {
        return res;
    }
    for i in 0..=bound {
        let omega = &res.syzygies[i];
        let cover = omega.projective_cover();
        let k = cover.kernel();
        res.terms.push(cover.source().clone());
        res.covers.push(cover);
        res.inclusions.push(k.inclusion);
        let done = k.module.is_zero();
        res.syzygies.push(k.module);
        if done {
            res.length = Bounded::Finite(i);
            return res;
        }
    }
    res.length = Bounded::Exceeds(bound);
    res
}

/// Minimal injective coresolution, computing `I^0, ..., I^bound`.
pub fn min_inj_coresolution(m: &Module, bound: usize) -> Coresolution {
    let mut res = Coresolution {
        module: m.clone(),
        terms: Vec::new(),
        hulls: Vec::new(),
        cosyzygies: vec![m.clone()],
        projections: Vec::new(),
        length: Bounded::Finite(0),
    };
    if m.is_zero() {
        return res;
    }
    for i in 0..=bound {
        let omega = &res.cosyzygies[i];
        let hull = omega.injective_hull();
        let (c, p) = hull.cokernel();
        res.terms.push(hull.target().clone());
        res.hulls.push(hull);
        res.projections.push(p);
        let done = c.is_zero();
        res.cosyzygies.push(c);
        if done {
            res.length = Bounded::Finite(i);
            return res;
        }
    }
    res.length = Bounded::Exceeds(bound);
    res
}

impl Resolution {
    /// `d_i: P_i -> P_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Morphism {
        self.covers[i].then(&self.inclusions[i - 1])
    }

    /// `P_i = sum P(v)^{k_v}`: the multiplicities `k`.
    pub fn term_multiplicities(&self, i: usize) -> Vec<usize> {
        self.terms[i].top_dims()
    }

    /// Every `Omega^{i+1}` lies in `rad P_i`.
    pub fn is_minimal(&self) -> bool {
        self.inclusions.iter().all(|inc| {
            let rad = inc.target().radical_space();
            rad.contains(&inc.image_space())
        })
    }

    /// Exactness and projectivity of every term.
    pub fn verify(&self) -> bool {
        self.terms.iter().all(Module::is_projective)
            && self.covers.iter().all(|c| c.is_surjective() && c.is_natural())
            && self.inclusions.iter().zip(&self.covers).all(|(inc, c)| {
                inc.is_injective() && inc.then(c).is_zero() && inc.rank() + c.rank() == c.source().dim()
            })
    }
}

impl Coresolution {
    /// `d^i: I^i -> I^{i+1}`.
    pub fn differential(&self, i: usize) -> Morphism {
        self.projections[i].then(&self.hulls[i + 1])
    }

    /// `I^i = sum I(v)^{k_v}`: the multiplicities `k`.
    pub fn term_multiplicities(&self, i: usize) -> Vec<usize> {
        self.terms[i].socle_dims()
    }

    /// Every hull has essential image: the socle of `I^i` lies in it.
    pub fn is_minimal(&self) -> bool {
        self.hulls.iter().all(|h| h.image_space().contains(&h.target().socle_space()))
    }

    pub fn verify(&self) -> bool {
        self.terms.iter().all(Module::is_injective)
            && self.hulls.iter().all(|h| h.is_injective() && h.is_natural())
            && self.hulls.iter().zip(&self.projections).all(|(h, p)| {
                p.is_surjective() && h.then(p).is_zero() && h.rank() + p.rank() == h.target().dim()
            })
    }
}

pub fn pd(m: &Module, bound: usize) -> Bounded {
    min_proj_resolution(m, bound).length
}

pub fn id(m: &Module, bound: usize) -> Bounded {
    min_inj_coresolution(m, bound).length
}

/// Maximum of `pd S(i)`.
pub fn gldim(alg: &std::sync::Arc<crate::pathalg::Algebra>, bound: usize) -> Bounded {
    (0..alg.num_vertices())
        .map(|i| pd(&Module::simple(alg, i), bound))
        .fold(Bounded::Finite(0), Bounded::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_and_injectives() {
        let a = fixtures::algebra("e1").unwrap();
        for i in 0..5 {
            assert_eq!(pd(&Module::projective(&a, i), 3), Bounded::Finite(0));
            assert_eq!(id(&Module::injective(&a, i), 3), Bounded::Finite(0));
        }
    }

    #[test]
    fn a3_is_hereditary() {
        let a = fixtures::algebra("a3").unwrap();
        assert_eq!(gldim(&a, 5), Bounded::Finite(1));
    }

    #[test]
    fn bounded_max() {
        use Bounded::*;
        assert_eq!(Finite(2).max(Finite(3)), Finite(3));
        assert_eq!(Finite(2).max(Exceeds(4)), Exceeds(4));
        assert_eq!(Finite(7).max(Exceeds(4)), Exceeds(6));
        assert_eq!(Exceeds(3).at_most(2), Some(false));
        assert_eq!(Exceeds(3).at_most(5), None);
    }

    #[test]
    fn resolutions_are_exact_and_minimal() {
        for (name, _) in fixtures::ALL {
            let a = fixtures::algebra(name).unwrap();
            for i in 0..a.num_vertices() {
                let r = min_proj_resolution(&Module::simple(&a, i), 4);
                assert!(r.verify() && r.is_minimal(), "{name}");
                let c = min_inj_coresolution(&Module::simple(&a, i), 4);
                assert!(c.verify() && c.is_minimal(), "{name}");
            }
        }
    }
}
