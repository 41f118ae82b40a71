//! Basis enumeration for the vacuum module.

use crate::algebra::Generator;
use crate::pbw::GeneratorOrder;

/// Partitions of `n` into parts `>= min_part`, parts in decreasing order.
fn partitions(n: i64, min_part: i64) -> Vec<Vec<i64>> {
    fn rec(rem: i64, max_part: i64, min_part: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (min_part..=max_part.min(rem)).rev() {
            cur.push(part);
            rec(rem - part, part, min_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, min_part, &mut Vec::new(), &mut out);
    out
}

/// PBW words `G_{-n_1}... J_{-k_1}... L_{-m_1}...` of degree `n`, with
/// `m_t >= 2` and `k_t, n_t >= 1`, each sorted G-block, J-block, L-block.
pub fn enumerate_basis(n: u32) -> Vec<Vec<Generator>> {
    let n = n as i64;
    let order = GeneratorOrder::order_32();
    let mut out = Vec::new();
    for ng in 0..=n {
        for nj in 0..=n - ng {
            let nl = n - ng - nj;
            for pg in partitions(ng, 1) {
                for pj in partitions(nj, 1) {
                    for pl in partitions(nl, 2) {
                        let mut word: Vec<Generator> = pg
                            .iter()
                            .map(|&p| Generator::G(-p))
                            .chain(pj.iter().map(|&p| Generator::J(-p)))
                            .chain(pl.iter().map(|&p| Generator::L(-p)))
                            .collect();
                        word.sort_by(|a, b| order.compare(*a, *b));
                        out.push(word);
                    }
                }
            }
        }
    }
    out
}

pub fn graded_dimension(n: u32) -> usize {
    enumerate_basis(n).len()
}

/// `-(sum of indices)` of a word.
pub fn vacuum_degree(word: &[Generator]) -> i64 {
    -word.iter().filter_map(|g| g.index()).sum::<i64>()
}
