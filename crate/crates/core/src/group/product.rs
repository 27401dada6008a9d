use std::sync::Arc;

use super::perm::{tuple_permute, Permutation};
use super::{FiniteGroup, GroupError};
use crate::index::MixedRadix;

/// Coordinates of a direct product `G₁ × … × Gₖ`, leftmost factor slowest.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    factors: Vec<Arc<FiniteGroup>>,
    radix: MixedRadix,
    group: Arc<FiniteGroup>,
}

impl DirectProduct {
    pub fn new(factors: Vec<Arc<FiniteGroup>>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::EmptyProduct);
        }
        let radix = MixedRadix::new(factors.iter().map(|g| g.order()).collect());
        let order = radix.total();
        let decoded: Vec<Vec<usize>> = (0..order).map(|x| radix.decode(x)).collect();
        let mut table = Vec::with_capacity(order * order);
        let mut digits = vec![0; factors.len()];
        for a in &decoded {
            for b in &decoded {
                for (k, g) in factors.iter().enumerate() {
                    digits[k] = g.mul(a[k], b[k]);
                }
                table.push(radix.encode(&digits));
            }
        }
        let names = if factors.len() == 1 {
            factors[0].names().map(|n| n.to_vec())
        } else {
            Some(
                decoded
                    .iter()
                    .map(|d| {
                        let parts: Vec<String> =
                            d.iter().zip(&factors).map(|(&x, g)| g.name(x)).collect();
                        format!("({})", parts.join(","))
                    })
                    .collect(),
            )
        };
        let group = Arc::new(FiniteGroup::from_flat(order, table, names)?);
        Ok(DirectProduct {
            factors,
            radix,
            group,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn factors(&self) -> &[Arc<FiniteGroup>] {
        &self.factors
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        self.radix.encode(parts)
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        self.radix.decode(x)
    }
}

/// Componentwise product of the factors; element codes are mixed-radix with
/// the leftmost factor slowest.
pub fn direct_product(groups: &[&FiniteGroup]) -> Result<FiniteGroup, GroupError> {
    let factors = groups.iter().map(|g| Arc::new((*g).clone())).collect();
    let dp = DirectProduct::new(factors)?;
    Ok((*dp.group).clone())
}

/// An element `((g₁,…,gₙ), σ)` of `Ḡ ≀ Sₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub base: Vec<usize>,
    pub perm: Permutation,
}

impl WreathElement {
    /// `((g),σ)·((h),τ) = ((g)·^σ(h), στ)`, evaluated directly from the
    /// defining formula rather than through a table.
    pub fn mul(&self, other: &Self, gbar: &FiniteGroup) -> Result<Self, GroupError> {
        let moved = tuple_permute(&self.perm, &other.base)?;
        let base = self
            .base
            .iter()
            .zip(&moved)
            .map(|(&g, &h)| gbar.mul(g, h))
            .collect();
        Ok(WreathElement {
            base,
            perm: self.perm.compose(&other.perm),
        })
    }

    pub fn inverse(&self, gbar: &FiniteGroup) -> Self {
        let sinv = self.perm.inverse();
        let moved = tuple_permute(&sinv, &self.base).expect("arity matches");
        WreathElement {
            base: moved.into_iter().map(|g| gbar.inv(g)).collect(),
            perm: sinv,
        }
    }
}

/// `Ḡ ≀ Sₙ` together with its coordinate system. Element code:
/// `base_index · n! + rank(σ)` with the base tuple mixed-radix.
#[derive(Clone, Debug)]
pub struct WreathGroup {
    base: Arc<FiniteGroup>,
    n: usize,
    perms: Vec<Permutation>,
    tuples: MixedRadix,
    group: Arc<FiniteGroup>,
}

impl WreathGroup {
    pub fn new(base: Arc<FiniteGroup>, n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroArity);
        }
        let perms = Permutation::all(n);
        let nf = perms.len();
        let tuples = MixedRadix::uniform(base.order(), n);
        let order = tuples.total() * nf;
        let elements: Vec<WreathElement> = (0..order)
            .map(|x| WreathElement {
                base: tuples.decode(x / nf),
                perm: perms[x % nf].clone(),
            })
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                let c = a.mul(b, &base)?;
                table.push(tuples.encode(&c.base) * nf + c.perm.rank());
            }
        }
        let names = elements
            .iter()
            .map(|e| {
                let parts: Vec<String> = e.base.iter().map(|&g| base.name(g)).collect();
                let perm: Vec<String> = e.perm.one_line().iter().map(|v| v.to_string()).collect();
                format!("(({}),[{}])", parts.join(","), perm.join(""))
            })
            .collect();
        let group = Arc::new(FiniteGroup::from_flat(order, table, Some(names))?);
        Ok(WreathGroup {
            base,
            n,
            perms,
            tuples,
            group,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn encode(&self, e: &WreathElement) -> usize {
        self.tuples.encode(&e.base) * self.perms.len() + e.perm.rank()
    }

    pub fn decode(&self, x: usize) -> WreathElement {
        let nf = self.perms.len();
        WreathElement {
            base: self.tuples.decode(x / nf),
            perm: self.perms[x % nf].clone(),
        }
    }

    /// Code of `((g₁,…,gₙ), e)`.
    pub fn embed_base(&self, base: &[usize]) -> usize {
        self.tuples.encode(base) * self.perms.len()
    }
}

/// `Ḡ ≀ Sₙ = Ḡⁿ ⋊ Sₙ` as a multiplication table.
pub fn wreath_group(gbar: &FiniteGroup, n: usize) -> Result<FiniteGroup, GroupError> {
    let w = WreathGroup::new(Arc::new(gbar.clone()), n)?;
    Ok((*w.group).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn direct_product_examples() {
        let c2 = c(2);
        let v4 = direct_product(&[&c2, &c2]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!((0..4).all(|x| v4.mul(x, x) == v4.identity()));
        let single = direct_product(&[&c2]).unwrap();
        assert_eq!(single.table(), c2.table());
        let c6 = direct_product(&[&c2, &c(3)]).unwrap();
        assert_eq!(c6.order(), 6);
        let rows = c6.rows();
        assert!((0..6).all(|a| (0..6).all(|b| rows[a][b] == rows[b][a])));
        assert_eq!(direct_product(&[]), Err(GroupError::EmptyProduct));
    }

    #[test]
    fn wreath_orders() {
        assert_eq!(wreath_group(&c(2), 3).unwrap().order(), 48);
        assert_eq!(wreath_group(&c(3), 2).unwrap().order(), 18);
        assert_eq!(wreath_group(&c(2), 0), Err(GroupError::ZeroArity));
    }

    #[test]
    fn wreath_hand_product() {
        // ((a,e),(1 2))·((e,a),e) = ((e,e),(1 2)) with a² = e
        let w = WreathGroup::new(Arc::new(c(2)), 2).unwrap();
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        let x = w.encode(&WreathElement {
            base: vec![1, 0],
            perm: swap.clone(),
        });
        let y = w.encode(&WreathElement {
            base: vec![0, 1],
            perm: Permutation::identity(2),
        });
        let z = w.decode(w.group().mul(x, y));
        assert_eq!(
            z,
            WreathElement {
                base: vec![0, 0],
                perm: swap
            }
        );
    }

    #[test]
    fn wreath_inverse_formula() {
        let s3 = Arc::new(super::super::symmetric_group(3).unwrap());
        let w = WreathGroup::new(s3.clone(), 2).unwrap();
        let g = w.group();
        for x in 0..g.order() {
            let e = w.decode(x);
            let inv = w.encode(&e.inverse(&s3));
            assert_eq!(g.mul(x, inv), g.identity());
            assert_eq!(g.inv(x), inv);
        }
    }

    #[test]
    fn wreath_arity_one_is_base() {
        let s3 = symmetric_group_arc();
        let w = WreathGroup::new(s3.clone(), 1).unwrap();
        assert_eq!(w.group().table(), s3.table());
    }

    fn symmetric_group_arc() -> Arc<FiniteGroup> {
        Arc::new(super::super::symmetric_group(3).unwrap())
    }

    #[test]
    fn base_subgroup_conjugation_is_componentwise() {
        // ((h),τ)((g),e)((h),τ)⁻¹ = ((h_i g_{τ⁻¹(i)} h_i⁻¹), e)
        let s3 = symmetric_group_arc();
        let w = WreathGroup::new(s3.clone(), 2).unwrap();
        let g = w.group();
        for x in 0..g.order() {
            let ex = w.decode(x);
            for b0 in 0..6 {
                for b1 in 0..6 {
                    let base = [b0, b1];
                    let y = w.embed_base(&base);
                    let moved = tuple_permute(&ex.perm, &base).unwrap();
                    let expect: Vec<usize> = (0..2).map(|i| s3.conjugate(ex.base[i], moved[i])).collect();
                    assert_eq!(g.conjugate(x, y), w.embed_base(&expect));
                }
            }
        }
    }
}
