use std::cmp::Ordering;
use std::fmt;

use super::Half;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    NotPartition(Vec<i32>),
    #[error("superpartition parts must be strictly decreasing positive half-odd values: {0:?}")]
    NotSuperPartition(Vec<Half>),
}

/// Weakly decreasing positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<i32>);

impl Partition {
    pub fn new(parts: Vec<i32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn deg(&self) -> Half {
        Half::from_int(self.0.iter().sum())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n` with parts in `[min_part, max_part]`, parts
    /// listed in decreasing order, the family sorted lexicographically.
    pub fn all_of(n: i32, min_part: i32, max_part: i32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: i32, lo: i32, hi: i32, cur: &mut Vec<i32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (lo..=hi.min(n)).rev() {
                cur.push(k);
                rec(n - k, lo, k, cur, out);
                cur.pop();
            }
        }
        if n >= 0 {
            rec(n, min_part.max(1), max_part, &mut cur, &mut out);
        }
        out
    }
}

/// Strictly decreasing positive half-odd values (modes of an odd generator).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SuperPartition(Vec<Half>);

impl SuperPartition {
    pub fn new(parts: Vec<Half>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|p| p.0 > 0 && p.0 % 2 == 1) && parts.windows(2).all(|w| w[0] > w[1]);
        if ok {
            Ok(SuperPartition(parts))
        } else {
            Err(PartitionError::NotSuperPartition(parts))
        }
    }

    pub fn empty() -> Self {
        SuperPartition(Vec::new())
    }

    pub fn parts(&self) -> &[Half] {
        &self.0
    }

    pub fn deg(&self) -> Half {
        Half(self.0.iter().map(|h| h.0).sum())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All superpartitions of total `Half(twice_n)` with twice-parts in
    /// `[min_twice, max_twice]`, sorted lexicographically.
    pub fn all_of(twice_n: i32, min_twice: i32, max_twice: i32) -> Vec<SuperPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: i32, lo: i32, hi: i32, cur: &mut Vec<Half>, out: &mut Vec<SuperPartition>) {
            if n == 0 {
                out.push(SuperPartition(cur.clone()));
                return;
            }
            let mut k = hi.min(n);
            if k % 2 == 0 {
                k -= 1;
            }
            while k >= lo {
                cur.push(Half(k));
                rec(n - k, lo, k - 2, cur, out);
                cur.pop();
                k -= 2;
            }
        }
        if twice_n >= 0 {
            let lo = if min_twice.max(1) % 2 == 0 { min_twice.max(1) + 1 } else { min_twice.max(1) };
            rec(twice_n, lo, max_twice, &mut cur, &mut out);
        }
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Debug for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// `a ≺ b` iff at the first differing position `a` has the larger part.
/// `None` when one sequence is a proper prefix of the other.
fn precedes<T: Ord>(a: &[T], b: &[T]) -> Option<Ordering> {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Greater => return Some(Ordering::Less),
            Ordering::Less => return Some(Ordering::Greater),
        }
    }
    (a.len() == b.len()).then_some(Ordering::Equal)
}

/// The partial order on pairs (partition, superpartition): total degree,
/// then total length, then `≺` on the partitions, then `≺` on the
/// superpartitions.
pub fn compare_pairs(a: (&Partition, &SuperPartition), b: (&Partition, &SuperPartition)) -> PairOrdering {
    let deg = |(m, l): (&Partition, &SuperPartition)| m.deg() + l.deg();
    let len = |(m, l): (&Partition, &SuperPartition)| m.len() + l.len();
    let ord = deg(a).cmp(&deg(b)).then_with(|| len(a).cmp(&len(b)));
    if ord != Ordering::Equal {
        return to_pair(ord);
    }
    match precedes(&a.0 .0, &b.0 .0) {
        None => PairOrdering::Incomparable,
        Some(Ordering::Equal) => match precedes(&a.1 .0, &b.1 .0) {
            None => PairOrdering::Incomparable,
            Some(o) => to_pair(o),
        },
        Some(o) => to_pair(o),
    }
}

fn to_pair(o: Ordering) -> PairOrdering {
    match o {
        Ordering::Less => PairOrdering::Less,
        Ordering::Equal => PairOrdering::Equal,
        Ordering::Greater => PairOrdering::Greater,
    }
}

/// A total order extending [`compare_pairs`]: a missing part counts as 0 when
/// applying `≺`, which resolves the prefix case.
pub fn pair_total_cmp(a: (&Partition, &SuperPartition), b: (&Partition, &SuperPartition)) -> Ordering {
    let deg = |(m, l): (&Partition, &SuperPartition)| m.deg() + l.deg();
    let len = |(m, l): (&Partition, &SuperPartition)| m.len() + l.len();
    fn padded<T: Ord + Copy>(a: &[T], b: &[T], zero: T) -> Ordering {
        let n = a.len().max(b.len());
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(zero);
            let y = b.get(i).copied().unwrap_or(zero);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
    deg(a)
        .cmp(&deg(b))
        .then_with(|| len(a).cmp(&len(b)))
        .then_with(|| padded(&a.0 .0, &b.0 .0, 0))
        .then_with(|| padded(&a.1 .0, &b.1 .0, Half(0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[i32]) -> SuperPartition {
        SuperPartition::new(v.iter().map(|&t| Half(t)).collect()).unwrap()
    }

    #[test]
    fn shorter_pair_is_smaller() {
        let e = SuperPartition::empty();
        assert_eq!(compare_pairs((&part(&[2]), &e), (&part(&[1, 1]), &e)), PairOrdering::Less);
        assert_eq!(compare_pairs((&part(&[1, 1]), &e), (&part(&[2]), &e)), PairOrdering::Greater);
    }

    #[test]
    fn repeated_superpartition_part_is_rejected() {
        assert!(SuperPartition::new(vec![Half(1), Half(1)]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn equal_and_incomparable() {
        let a = (part(&[3, 1]), sp(&[1]));
        assert_eq!(compare_pairs((&a.0, &a.1), (&a.0, &a.1)), PairOrdering::Equal);
        // (2,1,1) vs (2) with equal degree and length: prefix case
        let b = (part(&[2, 1, 1]), SuperPartition::empty());
        let c = (part(&[2]), sp(&[3, 1]));
        assert_eq!(compare_pairs((&b.0, &b.1), (&c.0, &c.1)), PairOrdering::Incomparable);
        assert_eq!(pair_total_cmp((&b.0, &b.1), (&c.0, &c.1)), Ordering::Less);
    }

    #[test]
    fn larger_first_part_precedes() {
        let e = SuperPartition::empty();
        assert_eq!(compare_pairs((&part(&[3, 1]), &e), (&part(&[2, 2]), &e)), PairOrdering::Less);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Partition::all_of(5, 1, 5).len(), 7);
        assert_eq!(Partition::all_of(4, 2, 4).len(), 2);
        // distinct half-odd parts summing to 4: (7/2,1/2), (5/2,3/2)
        assert_eq!(SuperPartition::all_of(8, 1, 8).len(), 2);
        assert_eq!(SuperPartition::all_of(0, 1, 8), vec![SuperPartition::empty()]);
    }
}
