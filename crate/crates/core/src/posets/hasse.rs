//! Transitive reduction of finite partial orders.

use crate::error::{Error, Result};

/// Elements with their cover relation, as `(lower, upper)` index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram<T> {
    pub elements: Vec<T>,
    pub covers: Vec<(usize, usize)>,
}

struct BitMatrix {
    words: usize,
    rows: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, rows: vec![0; n * words] }
    }

    fn set(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / 64] |= 1 << (b % 64);
    }

    fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.rows[a * self.words..(a + 1) * self.words]
    }
}

/// Builds the Hasse diagram of `leq` (reflexive pairs are ignored).
///
/// Fails if the strict relation has a 2-cycle or is not transitive.
pub fn hasse<T>(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<HasseDiagram<T>> {
    let n = elements.len();
    let mut below = BitMatrix::new(n);
    let mut above = BitMatrix::new(n);
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(&elements[a], &elements[b]) {
                above.set(a, b);
                below.set(b, a);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if above.get(a, b) && above.get(b, a) {
                return Err(Error::NotAPartialOrder(format!("elements {a} and {b} form a cycle")));
            }
        }
    }
    // Transitivity: every c above some b above a is above a.
    for a in 0..n {
        for b in 0..n {
            if !above.get(a, b) {
                continue;
            }
            for (w, (&x, &y)) in above.row(b).iter().zip(above.row(a)).enumerate() {
                let missing = x & !y & !(if w == a / 64 { 1 << (a % 64) } else { 0 });
                if missing != 0 {
                    let c = w * 64 + missing.trailing_zeros() as usize;
                    return Err(Error::NotAPartialOrder(format!(
                        "not transitive at {a} < {b} < {c}"
                    )));
                }
            }
        }
    }
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if above.get(a, b) && above.row(a).iter().zip(below.row(b)).all(|(x, y)| x & y == 0) {
                covers.push((a, b));
            }
        }
    }
    Ok(HasseDiagram { elements, covers })
}

impl<T> HasseDiagram<T> {
    /// Rank function if every maximal chain has the same length: `(ranks, length)`.
    pub fn grading(&self) -> Option<(Vec<usize>, usize)> {
        let n = self.elements.len();
        if n == 0 {
            return Some((Vec::new(), 0));
        }
        let mut preds = vec![Vec::new(); n];
        let mut has_upper = vec![false; n];
        for &(l, u) in &self.covers {
            preds[u].push(l);
            has_upper[l] = true;
        }
        // Longest chain from a minimal element, by memoized recursion.
        fn depth(x: usize, preds: &[Vec<usize>], memo: &mut [Option<usize>]) -> usize {
            if let Some(d) = memo[x] {
                return d;
            }
            let d = preds[x].iter().map(|&p| depth(p, preds, memo) + 1).max().unwrap_or(0);
            memo[x] = Some(d);
            d
        }
        let mut memo = vec![None; n];
        let ranks: Vec<usize> = (0..n).map(|x| depth(x, &preds, &mut memo)).collect();
        if self.covers.iter().any(|&(l, u)| ranks[u] != ranks[l] + 1) {
            return None;
        }
        let tops: Vec<usize> = (0..n).filter(|&x| !has_upper[x]).map(|x| ranks[x]).collect();
        if tops.windows(2).any(|w| w[0] != w[1]) {
            return None;
        }
        Some((ranks, tops[0]))
    }

    /// DOT rendering with edges from lower to upper.
    pub fn to_dot(&self, label: impl Fn(&T) -> String) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", label(e).replace('"', "\\\"")));
        }
        for &(l, u) in &self.covers {
            s.push_str(&format!("  n{l} -> n{u};\n"));
        }
        s.push_str("}\n");
        s
    }
}
