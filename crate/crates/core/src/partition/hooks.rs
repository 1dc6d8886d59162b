use super::Partition;

/// A border strip removable from `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    pub host: Partition,
    /// Cells as `(row, column)`.
    pub cells: Vec<(usize, usize)>,
    pub length: usize,
    /// Number of rows met.
    pub height: usize,
    /// `host` with the strip removed.
    pub remainder: Partition,
}

fn beta_numbers(mu: &Partition) -> Vec<usize> {
    let l = mu.len();
    mu.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (l - 1 - i)).collect())
}

/// All rim hooks of length `r` in `mu`, ordered by the row where they end.
pub fn rim_hooks(mu: &Partition, r: usize) -> Vec<RimHook> {
    if r == 0 {
        return Vec::new();
    }
    let beta = beta_numbers(mu);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = 1 + beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        let remainder = from_beta(next);
        let cells = mu
            .cells()
            .filter(|&(row, col)| col >= remainder.part(row))
            .collect();
        out.push(RimHook {
            host: mu.clone(),
            cells,
            length: r,
            height,
            remainder,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn full_row() {
        let hs = rim_hooks(&p(&[5]), 5);
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].height, 1);
        assert!(hs[0].remainder.is_empty());
    }

    #[test]
    fn corners_of_two_one() {
        let hs = rim_hooks(&p(&[2, 1]), 1);
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|h| h.height == 1 && h.cells.len() == 1));
    }

    #[test]
    fn square_dominoes() {
        let mut hs: Vec<_> = rim_hooks(&p(&[2, 2]), 2)
            .into_iter()
            .map(|h| (h.remainder, h.height))
            .collect();
        hs.sort();
        assert_eq!(hs, vec![(p(&[1, 1]), 2), (p(&[2]), 1)]);
    }

    #[test]
    fn strips_are_connected_and_thin() {
        for d in 1..=7 {
            for mu in crate::partition::partitions_of(d) {
                for r in 1..=d {
                    for h in rim_hooks(&mu, r) {
                        assert_eq!(h.cells.len(), r);
                        assert_eq!(h.remainder.size() + r, d);
                        let rows: std::collections::BTreeSet<_> =
                            h.cells.iter().map(|c| c.0).collect();
                        assert_eq!(rows.len(), h.height);
                        for &(a, b) in &h.cells {
                            let square = [(a + 1, b), (a, b + 1), (a + 1, b + 1)]
                                .iter()
                                .all(|c| h.cells.contains(c));
                            assert!(!square);
                        }
                    }
                }
            }
        }
    }
}
