//! Mixed-radix encoding of tuples, leftmost coordinate slowest. Every tensor
//! and product basis in the crate is ordered this way.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<usize>,
    total: usize,
}

impl MixedRadix {
    pub fn new(radices: Vec<usize>) -> Self {
        let total = radices.iter().product();
        MixedRadix { radices, total }
    }

    pub fn uniform(radix: usize, len: usize) -> Self {
        Self::new(vec![radix; len])
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn len(&self) -> usize {
        self.radices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.radices.is_empty()
    }

    /// Number of tuples.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.radices.len());
        digits
            .iter()
            .zip(&self.radices)
            .fold(0, |acc, (&d, &r)| {
                debug_assert!(d < r);
                acc * r + d
            })
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.radices.len()];
        for (slot, &r) in digits.iter_mut().zip(&self.radices).rev() {
            *slot = index % r;
            index /= r;
        }
        digits
    }
}
