use super::Graph;
use std::collections::BTreeSet;

/// A separation `(A, B)`: `A ∪ B = V`, both strict sides non-empty and no edge
/// between `A \ B` and `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Separation {
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
}

impl Separation {
    pub fn new(a: impl IntoIterator<Item = usize>, b: impl IntoIterator<Item = usize>) -> Self {
        Separation {
            a: a.into_iter().collect(),
            b: b.into_iter().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.a.intersection(&self.b).count()
    }

    pub fn separator(&self) -> Vec<usize> {
        self.a.intersection(&self.b).copied().collect()
    }

    pub fn a_only(&self) -> Vec<usize> {
        self.a.difference(&self.b).copied().collect()
    }

    pub fn b_only(&self) -> Vec<usize> {
        self.b.difference(&self.a).copied().collect()
    }

    pub fn a_vec(&self) -> Vec<usize> {
        self.a.iter().copied().collect()
    }

    pub fn b_vec(&self) -> Vec<usize> {
        self.b.iter().copied().collect()
    }

    pub fn swapped(&self) -> Self {
        Separation {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Checks the separation axioms against `g`, naming the first failure.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        if let Some(&v) = self.a.iter().chain(self.b.iter()).find(|&&v| v >= n) {
            return Err(format!("vertex {v} out of range"));
        }
        if let Some(v) = g
            .vertices()
            .find(|v| !self.a.contains(v) && !self.b.contains(v))
        {
            return Err(format!("vertex {v} is on neither side"));
        }
        let a_only = self.a_only();
        let b_only = self.b_only();
        if a_only.is_empty() || b_only.is_empty() {
            return Err("a strict side is empty".into());
        }
        for &u in &a_only {
            if let Some(&w) = g.neighbors(u).iter().find(|w| self.b_only_contains(**w)) {
                return Err(format!("edge {u}-{w} crosses the separation"));
            }
        }
        Ok(())
    }

    fn b_only_contains(&self, v: usize) -> bool {
        self.b.contains(&v) && !self.a.contains(&v)
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

/// All separations of order at most `max_order`, in canonical order: by
/// separator size, then separator in lexicographic order, then by the set of
/// components placed on the `A` side. The component holding the smallest
/// non-separator vertex always lies in `A`, so `min(A \ B) < min(B \ A)` and
/// every separation appears exactly once.
pub fn separations_up_to_order(g: &Graph, max_order: usize) -> Separations<'_> {
    Separations {
        g,
        max_order,
        size: 0,
        combo: Vec::new(),
        started: false,
        comps: Vec::new(),
        mask: 0,
    }
}

/// Lazy iterator behind [`separations_up_to_order`].
pub struct Separations<'g> {
    g: &'g Graph,
    max_order: usize,
    size: usize,
    combo: Vec<usize>,
    started: bool,
    comps: Vec<Vec<usize>>,
    // Bit i selects comps[i + 1] for the A side.
    mask: u128,
}

impl Separations<'_> {
    /// Advances `combo` to the next separator candidate; `false` when done.
    fn next_combo(&mut self) -> bool {
        let n = self.g.n();
        if !self.started {
            self.started = true;
            self.size = 0;
            self.combo.clear();
            return self.size <= self.max_order.min(n);
        }
        // Lexicographic successor among the subsets of the current size.
        let k = self.size;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.combo[i] < n - k + i {
                self.combo[i] += 1;
                for j in i + 1..k {
                    self.combo[j] = self.combo[j - 1] + 1;
                }
                return true;
            }
        }
        self.size += 1;
        if self.size > self.max_order || self.size > n {
            return false;
        }
        self.combo = (0..self.size).collect();
        true
    }

    fn load_components(&mut self) {
        let removed = crate::graph::mark(self.g.n(), &self.combo);
        self.comps = self.g.components_avoiding(&removed);
        self.mask = 0;
    }
}

impl Iterator for Separations<'_> {
    type Item = Separation;

    fn next(&mut self) -> Option<Separation> {
        loop {
            let r = self.comps.len();
            if r >= 2 {
                let limit: u128 = (1u128 << (r - 1)) - 1;
                if self.mask < limit {
                    let mask = self.mask;
                    self.mask += 1;
                    let mut a: BTreeSet<usize> = self.combo.iter().copied().collect();
                    let mut b = a.clone();
                    a.extend(self.comps[0].iter().copied());
                    for (i, comp) in self.comps[1..].iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            a.extend(comp.iter().copied());
                        } else {
                            b.extend(comp.iter().copied());
                        }
                    }
                    return Some(Separation { a, b });
                }
            }
            if !self.next_combo() {
                return None;
            }
            self.load_components();
            assert!(
                self.comps.len() <= 128,
                "too many components to enumerate unions"
            );
        }
    }
}
