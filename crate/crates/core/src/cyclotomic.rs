//! q-orbit machinery for abelian groups: the orbit of g under g -> g^q, its
//! size t_g (the multiplicative order of q modulo o(g)), the lcm l of all
//! t_g, a maximal-order witness w with t_w = l, and the arithmetic
//! splitting-field tests built on these numbers.

use crate::arith;
use crate::field::{modpow, multiplicative_order, PrimePower};
use crate::group::Group;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("the group must be abelian for q-orbit data")]
    NotAbelian,
    #[error("characteristic {0} divides the group order {1}; the algebra is not semisimple")]
    CharacteristicDividesOrder(u64, u64),
    #[error("t must be positive")]
    ZeroIndex,
}

/// q-orbits of an abelian group together with the integers attached to them.
#[derive(Debug, Clone)]
pub struct QOrbitData {
    group: Group,
    q: PrimePower,
    /// t_g for every element index: the least a > 0 with g^(q^a) = g.
    pub t: Vec<u64>,
    /// Orbit partition, each orbit listed from its smallest member, orbits
    /// ordered by smallest member.
    pub orbits: Vec<Vec<usize>>,
    /// Element index -> position of its orbit in `orbits`.
    pub orbit_index: Vec<usize>,
    /// lcm of all t_g.
    pub l: u64,
    /// Smallest element index of maximal order (o(w) = exp(G)).
    pub w: usize,
    /// t of the witness; always equals `l`.
    pub t_w: u64,
    /// phi(o(g)) for every element: the size of the generator class C_g.
    pub gen_class_sizes: Vec<u64>,
}

impl QOrbitData {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }
}

fn check_semisimple(group: &Group, q: PrimePower) -> Result<(), CyclotomicError> {
    if group.order() as u64 % q.p() == 0 {
        return Err(CyclotomicError::CharacteristicDividesOrder(
            q.p(),
            group.order() as u64,
        ));
    }
    Ok(())
}

/// Full q-orbit data for an abelian group with p not dividing |G|.
///
/// t_g is computed arithmetically as the multiplicative order of q modulo
/// o(g); the orbit partition itself walks g -> g^q through the group
/// operation and cross-checks that the orbit size equals t_g.
pub fn qorbits(group: &Group, q: PrimePower) -> Result<QOrbitData, CyclotomicError> {
    if !group.is_abelian() {
        return Err(CyclotomicError::NotAbelian);
    }
    check_semisimple(group, q)?;
    let n = group.order();
    let mut t = vec![0u64; n];
    let mut gen_class_sizes = vec![0u64; n];
    for g in 0..n {
        let o = group.element_order(g);
        t[g] = multiplicative_order(q.q(), o)
            .expect("gcd(q, o(g)) = 1 since p does not divide |G|");
        gen_class_sizes[g] = arith::euler_phi(o);
    }
    let mut orbit_index = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if orbit_index[g] != usize::MAX {
            continue;
        }
        let mut orbit = vec![g];
        orbit_index[g] = orbits.len();
        let mut x = group.pow(g, q.q());
        while x != g {
            orbit_index[x] = orbits.len();
            orbit.push(x);
            x = group.pow(x, q.q());
        }
        // built-in oracle: the walked orbit size must equal the arithmetic t_g
        assert_eq!(
            orbit.len() as u64,
            t[g],
            "orbit size disagrees with the multiplicative order of q mod o(g)"
        );
        orbits.push(orbit);
    }
    let l = t.iter().copied().fold(1u64, arith::lcm);
    let (_, w) = group.exponent();
    let w = w.expect("abelian groups always have a maximal-order element");
    let t_w = t[w];
    assert_eq!(t_w, l, "t of the maximal-order witness must equal lcm of all t_g");
    Ok(QOrbitData {
        group: group.clone(),
        q,
        t,
        orbits,
        orbit_index,
        l,
        w,
        t_w,
        gen_class_sizes,
    })
}

/// Evidence backing a splitting-field verdict for the degree-t extension of
/// GF(q): the two arithmetic conditions are equivalent and are both
/// recorded; the verdict itself is decided by the divisibility
/// exp(G) | q^t - 1 (computed by modular exponentiation mod exp(G)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplittingEvidence {
    pub verdict: bool,
    /// exp(G) | q^t - 1.
    pub exp_divides_qt_minus_1: bool,
    /// t_w | t.
    pub tw_divides_t: bool,
    pub exponent: u64,
    pub t_w: u64,
}

/// Whether the degree-t extension of GF(q) is a splitting field for the
/// abelian group G, decided arithmetically.
pub fn is_splitting_field(
    group: &Group,
    q: PrimePower,
    t: u64,
) -> Result<SplittingEvidence, CyclotomicError> {
    if !group.is_abelian() {
        return Err(CyclotomicError::NotAbelian);
    }
    check_semisimple(group, q)?;
    if t == 0 {
        return Err(CyclotomicError::ZeroIndex);
    }
    let (exponent, _) = group.exponent();
    let t_w = witness_orbit_size(exponent, q);
    let exp_divides = if exponent == 1 {
        true
    } else {
        modpow(q.q() % exponent, t, exponent) == 1 % exponent
    };
    let tw_divides = t % t_w == 0;
    debug_assert_eq!(exp_divides, tw_divides);
    Ok(SplittingEvidence {
        verdict: exp_divides,
        exp_divides_qt_minus_1: exp_divides,
        tw_divides_t: tw_divides,
        exponent,
        t_w,
    })
}

/// t_w for an abelian group of the given exponent: the multiplicative order
/// of q modulo exp(G).  (The witness orbit realizes the lcm of all orbit
/// sizes.)
pub fn witness_orbit_size(exponent: u64, q: PrimePower) -> u64 {
    multiplicative_order(q.q(), exponent)
        .expect("gcd(q, exp(G)) = 1 since p does not divide |G|")
}

/// Necessary condition for GF(q) to be a splitting field of an arbitrary
/// finite group H with p not dividing |H|: the field must contain a
/// primitive exp(H/H')-th root of unity, i.e. exp(H/H') | q - 1.  This is
/// not sufficient in general.
pub fn splitting_necessary_condition(group: &Group, q: PrimePower) -> Result<bool, CyclotomicError> {
    check_semisimple(group, q)?;
    let quotient_exponent = if group.is_abelian() {
        group.exponent().0
    } else {
        let (_, quotient) = group.commutator_subgroup();
        quotient.exponent().0
    };
    Ok((q.q() - 1) % quotient_exponent == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::SplitMix64;

    fn pp(p: u64, alpha: u32) -> PrimePower {
        PrimePower::new(p, alpha).unwrap()
    }

    #[test]
    fn c3_over_gf2() {
        let g = Group::abelian(&[3]).unwrap();
        let data = qorbits(&g, pp(2, 1)).unwrap();
        assert_eq!(data.t[1], 2); // the generator
        assert_eq!(data.l, 2);
        assert_eq!(data.t_w, 2);
        assert_eq!(data.orbits, vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn singleton_orbits_when_exponent_divides_q_minus_1() {
        // exp(C6) = 6 divides 25 - 1
        let g = Group::abelian(&[6]).unwrap();
        let data = qorbits(&g, pp(5, 2)).unwrap();
        assert!(data.t.iter().all(|&t| t == 1));
        assert_eq!(data.t_w, 1);
        assert_eq!(data.orbits.len(), 6);
    }

    #[test]
    fn example_group_over_5_to_6() {
        let g = Group::abelian(&[2, 16, 9, 3]).unwrap();
        let data = qorbits(&g, pp(5, 6)).unwrap();
        assert_eq!(4 % data.t_w, 0); // t_w divides 4
        assert_eq!(data.t_w, 2); // and the exact value is 2: ord(5^6 mod 144) = ord(73)
        assert_eq!(data.l, data.t_w);
    }

    #[test]
    fn splitting_examples() {
        let c3 = Group::abelian(&[3]).unwrap();
        assert!(is_splitting_field(&c3, pp(2, 1), 2).unwrap().verdict);
        assert!(!is_splitting_field(&c3, pp(2, 1), 1).unwrap().verdict);

        let g = Group::abelian(&[2, 16, 9, 3]).unwrap();
        let ev = is_splitting_field(&g, pp(5, 6), 4).unwrap();
        assert!(ev.verdict);
        assert_eq!(ev.exponent, 144);
    }

    #[test]
    fn characteristic_dividing_order_is_rejected() {
        let c6 = Group::abelian(&[6]).unwrap();
        assert!(matches!(
            qorbits(&c6, pp(2, 1)),
            Err(CyclotomicError::CharacteristicDividesOrder(2, 6))
        ));
        assert!(matches!(
            is_splitting_field(&c6, pp(3, 1), 1),
            Err(CyclotomicError::CharacteristicDividesOrder(3, 6))
        ));
    }

    #[test]
    fn necessary_condition_examples() {
        let sl23 = Group::from_permutations(&[
            vec![1, 3, 5, 4, 2, 7, 8, 6],
            vec![2, 4, 6, 7, 3, 8, 1, 5],
        ])
        .unwrap();
        // exp(H/H') = 3 does not divide 5 - 1 = 4
        assert!(!splitting_necessary_condition(&sl23, pp(5, 1)).unwrap());
        // but 3 | 25 - 1 = 24
        assert!(splitting_necessary_condition(&sl23, pp(5, 2)).unwrap());

        let c6 = Group::abelian(&[6]).unwrap();
        assert!(splitting_necessary_condition(&c6, pp(5, 2)).unwrap());
    }

    #[test]
    fn orbit_sizes_sum_and_match_members() {
        let g = Group::abelian(&[4, 5]).unwrap();
        let data = qorbits(&g, pp(3, 1)).unwrap();
        let total: usize = data.orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, g.order());
        for orbit in &data.orbits {
            for &m in orbit {
                assert_eq!(data.t[m] as usize, orbit.len());
            }
        }
    }

    /// Orbit-law checks on deterministic random instances: g^(q^a) = g iff
    /// t_g | a, and o(g) | o(h) implies t_g | t_h.
    #[test]
    fn orbit_laws_on_random_instances() {
        let mut rng = SplitMix64(0xC1C10);
        let primes = [2u64, 3, 5, 7, 11, 13];
        let mut done = 0;
        while done < 25 {
            let k = 1 + rng.below(2) as usize;
            let invariants: Vec<u64> = (0..k).map(|_| 2 + rng.below(11)).collect();
            let order: u64 = invariants.iter().product();
            if order > 120 {
                continue;
            }
            let p = primes[rng.below(primes.len() as u64) as usize];
            if order % p == 0 {
                continue;
            }
            let alpha = 1 + rng.below(3) as u32;
            let Ok(q) = PrimePower::new(p, alpha) else { continue };
            if q.q() > 1 << 16 {
                continue;
            }
            let g = Group::abelian(&invariants).unwrap();
            let data = qorbits(&g, q).unwrap();
            assert_eq!(data.t_w, data.l);
            for idx in 0..g.order() {
                let o = g.element_order(idx);
                for a in 1..=(4 * data.l) {
                    let qa = modpow(q.q(), a, o);
                    let fixes = g.pow(idx, qa) == idx;
                    assert_eq!(fixes, a % data.t[idx] == 0);
                }
            }
            for gidx in 0..g.order() {
                for hidx in 0..g.order() {
                    if g.element_order(hidx) % g.element_order(gidx) == 0 {
                        assert_eq!(data.t[hidx] % data.t[gidx], 0);
                    }
                }
            }
            done += 1;
        }
    }
}
