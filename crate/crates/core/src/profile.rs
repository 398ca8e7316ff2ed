/// Values of a complexity measure for every prefix length `N = 1..=nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    values: Vec<usize>,
}

impl ComplexityProfile {
    /// `values[N - 1]` is the value at prefix length `N`.
    ///
    /// Panics if the values decrease anywhere; every measure profiled here
    /// is monotone in `N`.
    pub fn from_values(values: Vec<usize>) -> Self {
        assert!(
            values.windows(2).all(|w| w[0] <= w[1]),
            "complexity profile must be nondecreasing"
        );
        ComplexityProfile { values }
    }

    pub fn nmax(&self) -> usize {
        self.values.len()
    }

    /// Value at prefix length `n` (1-based).
    pub fn value(&self, n: usize) -> Option<usize> {
        n.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn last(&self) -> Option<(usize, usize)> {
        self.values.last().map(|&v| (self.values.len(), v))
    }

    /// `(N, value)` pairs in increasing `N`.
    pub fn entries(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (i + 1, v))
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }
}
