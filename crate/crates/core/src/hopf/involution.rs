use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::combinat::{ordered_set_partitions, OrderedSetPartition};
use crate::error::Result;
use crate::graphs::{
    canonical_partition, graph_involution_step, orientation_from_partition, partitions_inducing, Edge, Graph,
    Orientation,
};
use crate::linear::Scalar;

type SignFn<T> = Box<dyn Fn(&T) -> i8 + Send + Sync>;
type MapFn<T> = Box<dyn Fn(&T) -> Result<T> + Send + Sync>;

/// A finite signed set with a candidate sign-reversing involution.
pub struct SignedSet<T> {
    elements: Vec<T>,
    sign: SignFn<T>,
    iota: MapFn<T>,
}

impl<T> SignedSet<T> {
    pub fn new(
        elements: Vec<T>,
        sign: impl Fn(&T) -> i8 + Send + Sync + 'static,
        iota: impl Fn(&T) -> Result<T> + Send + Sync + 'static,
    ) -> Self {
        SignedSet { elements, sign: Box::new(sign), iota: Box::new(iota) }
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn sign(&self, a: &T) -> i8 {
        (self.sign)(a)
    }

    pub fn apply(&self, a: &T) -> Result<T> {
        (self.iota)(a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport<T> {
    pub ok: bool,
    pub fixed_points: Vec<T>,
    pub signed_sum: Scalar,
    /// Description of the first element that broke the involution contract.
    pub violation: Option<String>,
}

/// Checks that `iota` squares to the identity, stays inside the set and
/// reverses signs on two-cycles; collects fixed points and the signed sum.
pub fn verify_involution<T: Clone + Ord + Debug>(s: &SignedSet<T>) -> InvolutionReport<T> {
    let members: BTreeSet<&T> = s.elements.iter().collect();
    let mut fixed_points = Vec::new();
    let mut signed_sum = Scalar::from(0);
    let mut violation = None;
    for a in &s.elements {
        signed_sum += s.sign(a);
        if violation.is_some() {
            continue;
        }
        let b = match s.apply(a) {
            Ok(b) => b,
            Err(e) => {
                violation = Some(format!("iota({a:?}) failed: {e}"));
                continue;
            }
        };
        if b == *a {
            fixed_points.push(a.clone());
            continue;
        }
        if !members.contains(&b) {
            violation = Some(format!("iota({a:?}) = {b:?} leaves the set"));
        } else if s.sign(&b) != -s.sign(a) {
            violation = Some(format!("iota({a:?}) = {b:?} keeps the sign"));
        } else {
            match s.apply(&b) {
                Ok(back) if back == *a => {}
                Ok(back) => violation = Some(format!("iota(iota({a:?})) = {back:?}")),
                Err(e) => violation = Some(format!("iota({b:?}) failed: {e}")),
            }
        }
    }
    InvolutionReport { ok: violation.is_none(), fixed_points, signed_sum, violation }
}

fn block_sign(pi: &OrderedSetPartition) -> i8 {
    if pi.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Split the first block of size two or more, or merge a singleton into the
/// next block when it is smaller than that block's minimum.
pub fn poly_osp_involution(pi: &OrderedSetPartition) -> OrderedSetPartition {
    let mut blocks = pi.blocks().to_vec();
    for l in 0..blocks.len() {
        if blocks[l].len() >= 2 {
            let rest = blocks[l].split_off(1);
            blocks.insert(l + 1, rest);
            return OrderedSetPartition::from_blocks_unchecked(blocks);
        }
        if l + 1 < blocks.len() && blocks[l][0] < blocks[l + 1][0] {
            let next = blocks.remove(l + 1);
            blocks[l].extend(next);
            return OrderedSetPartition::from_blocks_unchecked(blocks);
        }
    }
    pi.clone()
}

/// All ordered set partitions of `[n]` with the splitting and merging involution.
pub fn poly_osp_signed_set(n: usize) -> SignedSet<OrderedSetPartition> {
    SignedSet::new(ordered_set_partitions(n).collect(), block_sign, |pi| Ok(poly_osp_involution(pi)))
}

/// `A_F` for a flat `F` of `g`, with the orientation involution.
pub fn graph_flat_signed_set(g: &Graph, flat: &BTreeSet<Edge>) -> SignedSet<OrderedSetPartition> {
    let (g2, f2) = (g.clone(), flat.clone());
    SignedSet::new(partitions_inducing(g, flat), block_sign, move |pi| graph_involution_step(&g2, &f2, pi))
}

/// `Pi_O`: partitions into independent sets whose induced orientation is `o`.
pub fn orientation_class_signed_set(o: &Orientation) -> SignedSet<OrderedSetPartition> {
    let g = o.underlying();
    let empty = BTreeSet::new();
    let elements = partitions_inducing(&g, &empty)
        .into_iter()
        .filter(|pi| orientation_from_partition(&g, pi).ok().as_ref() == Some(o))
        .collect();
    SignedSet::new(elements, block_sign, move |pi| graph_involution_step(&g, &empty, pi))
}

/// Whether `phi` is the canonical partition of the orientation it induces.
pub fn is_canonical_for(g: &Graph, phi: &OrderedSetPartition) -> Result<bool> {
    let o = orientation_from_partition(g, phi)?;
    Ok(canonical_partition(&o)? == *phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osp(s: &str) -> OrderedSetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn poly_involution_examples() {
        assert_eq!(poly_osp_involution(&osp("(5,3,249,16,78)")), osp("(5,3,2,49,16,78)"));
        assert_eq!(poly_osp_involution(&osp("(5,3,2,49,16,78)")), osp("(5,3,249,16,78)"));
        assert_eq!(poly_osp_involution(&osp("(3,2,1)")), osp("(3,2,1)"));
    }

    #[test]
    fn poly_involution_fixed_point() {
        for n in 1..=6usize {
            let report = verify_involution(&poly_osp_signed_set(n));
            assert!(report.ok, "{:?}", report.violation);
            let phi: Vec<u32> = (1..=n as u32).rev().collect();
            assert_eq!(report.fixed_points, vec![OrderedSetPartition::singletons(&phi)]);
            assert_eq!(report.signed_sum, crate::linear::sign(n));
        }
    }

    #[test]
    fn identity_on_one_positive_element() {
        let s = SignedSet::new(vec![7u8], |_| 1, |a| Ok(*a));
        let r = verify_involution(&s);
        assert!(r.ok);
        assert_eq!(r.fixed_points, vec![7]);
        assert_eq!(r.signed_sum, Scalar::from(1));
    }

    #[test]
    fn detects_broken_maps() {
        let same_sign = SignedSet::new(vec![1u8, 2], |_| 1, |a| Ok(3 - a));
        assert!(!verify_involution(&same_sign).ok);
        let escaping = SignedSet::new(vec![1u8, 2], |a| if *a == 1 { 1 } else { -1 }, |a| Ok(a + 5));
        assert!(!verify_involution(&escaping).ok);
        let cycle = SignedSet::new(vec![0u8, 1, 2], |a| if *a == 1 { 1 } else { -1 }, |a| Ok((a + 1) % 3));
        assert!(!verify_involution(&cycle).ok);
    }

    #[test]
    fn orientation_class_has_unique_fixed_point() {
        let o = Orientation::new(8, [(5, 8), (8, 7), (5, 6), (8, 1), (3, 6), (3, 4), (2, 1)]).unwrap();
        let r = verify_involution(&orientation_class_signed_set(&o));
        assert!(r.ok);
        assert_eq!(r.fixed_points, vec![osp("(5,8,7,3,6,4,2,1)")]);
        assert_eq!(r.signed_sum, Scalar::from(1));
        assert!(is_canonical_for(&o.underlying(), &r.fixed_points[0]).unwrap());
    }

    #[test]
    fn triangle_empty_flat() {
        let k3 = Graph::complete(3);
        let r = verify_involution(&graph_flat_signed_set(&k3, &BTreeSet::new()));
        assert!(r.ok);
        assert_eq!(r.fixed_points.len(), 6);
        assert_eq!(r.signed_sum, Scalar::from(-6));
    }
}
