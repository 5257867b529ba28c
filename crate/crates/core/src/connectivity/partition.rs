//! Set-partition enumeration and the exhaustive Nash-Williams–Tutte check.

use super::PartitionCertificate;
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, Partition};

/// Largest order accepted by [`nash_williams_oracle`] (Bell(12) = 4 213 597).
pub const PARTITION_ORACLE_MAX_N: usize = 12;

/// All set partitions of `0..n` as restricted-growth strings, in
/// lexicographic order: `labels[0] = 0` and
/// `labels[i] <= 1 + max(labels[..i])`.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    labels: Vec<usize>,
    // prefix_max[i] = max(labels[..i]), prefix_max[0] unused
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.labels.clone());
        }
        let n = self.labels.len();
        // Rightmost position that can still grow.
        let Some(i) = (1..n).rev().find(|&i| self.labels[i] <= self.prefix_max[i]) else {
            self.done = true;
            return None;
        };
        self.labels[i] += 1;
        for j in i + 1..n {
            self.labels[j] = 0;
            self.prefix_max[j] = self.prefix_max[j - 1].max(self.labels[j - 1]);
        }
        Some(self.labels.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashWilliamsCheck {
    /// Every partition satisfies `Σ d(Vᵢ) ≥ 2k(t − 1)`.
    pub holds: bool,
    /// First partition (in enumeration order) of maximum deficiency.
    pub worst: PartitionCertificate,
}

/// Exhaustive Nash-Williams–Tutte test of `τ(G) ≥ k` over every vertex
/// partition. Refuses `n > 12`.
pub fn nash_williams_oracle(g: &Graph, k: usize) -> Result<NashWilliamsCheck> {
    let n = g.n();
    if k == 0 {
        return Err(domain("k must be positive"));
    }
    if n > PARTITION_ORACLE_MAX_N {
        return Err(Error::Refused(format!(
            "partition enumeration needs n <= {PARTITION_ORACLE_MAX_N}, got {n}"
        )));
    }
    if n == 0 {
        return Err(domain("graph has no vertices"));
    }
    let edges = g.edges();
    let k = k as i64;
    let mut best: Option<(i64, Vec<usize>)> = None;
    for labels in SetPartitions::new(n) {
        let t = 1 + *labels.iter().max().expect("n >= 1") as i64;
        let crossing = edges.iter().filter(|&&(u, v)| labels[u] != labels[v]).count() as i64;
        let deficiency = 2 * k * (t - 1) - 2 * crossing;
        if best.as_ref().map_or(true, |(d, _)| deficiency > *d) {
            best = Some((deficiency, labels));
        }
    }
    let (deficiency, labels) = best.expect("at least one partition");
    Ok(NashWilliamsCheck {
        holds: deficiency <= 0,
        worst: PartitionCertificate {
            partition: Partition::from_labels(&labels),
            deficiency,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, named};

    #[test]
    fn enumerates_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(SetPartitions::new(n).count(), b, "n={n}");
        }
        let all: Vec<Vec<usize>> = SetPartitions::new(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn oracle_examples() {
        assert!(nash_williams_oracle(&complete(4).unwrap(), 2).unwrap().holds);
        assert!(!nash_williams_oracle(&complete(4).unwrap(), 3).unwrap().holds);

        let check = nash_williams_oracle(&named::petersen(), 2).unwrap();
        assert!(!check.holds);
        assert_eq!(check.worst.partition, Partition::singletons(10));
        assert_eq!(check.worst.deficiency, 36 - 30);

        let check = nash_williams_oracle(&named::petersen(), 1).unwrap();
        assert!(check.holds);
    }

    #[test]
    fn guards() {
        assert!(nash_williams_oracle(&complete(4).unwrap(), 0).is_err());
        assert!(matches!(
            nash_williams_oracle(&complete(13).unwrap(), 1),
            Err(Error::Refused(_))
        ));
    }
}
