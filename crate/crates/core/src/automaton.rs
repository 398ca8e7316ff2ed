//! Online suffix automaton (DAWG) over the binary alphabet.
//!
//! Every factor `w` of the text belongs to exactly one state; all factors of
//! a state share their set of end positions and therefore their right
//! extensions. A state with both outgoing transitions holds factors that
//! occur once followed by `0` and once followed by `1`.

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct State {
    len: u32,
    link: u32,
    next: [u32; 2],
    /// Exclusive end of the first occurrence of this state's factors.
    first_end: u32,
}

#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
    text_len: u32,
    deepest_branch: Option<u32>,
}

impl Default for SuffixAutomaton {
    fn default() -> Self {
        Self::new()
    }
}

impl SuffixAutomaton {
    pub fn new() -> Self {
        Self::with_capacity(0)
    }

    /// Reserves room for a text of `len` symbols (at most `2 len` states).
    pub fn with_capacity(len: usize) -> Self {
        let mut states = Vec::with_capacity(2 * len + 1);
        states.push(State {
            len: 0,
            link: NONE,
            next: [NONE; 2],
            first_end: 0,
        });
        SuffixAutomaton {
            states,
            last: 0,
            text_len: 0,
            deepest_branch: None,
        }
    }

    pub fn text_len(&self) -> usize {
        self.text_len as usize
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Length of the longest factor followed by both symbols somewhere in
    /// the text, or `None` if no factor (not even the empty one) branches.
    pub fn deepest_branch(&self) -> Option<usize> {
        self.deepest_branch.map(|t| t as usize)
    }

    /// Appends one symbol.
    pub fn extend(&mut self, bit: bool) {
        let c = bit as usize;
        assert!(
            self.text_len < NONE - 1,
            "text too long for 32-bit state indices"
        );
        self.text_len += 1;
        let cur = self.states.len() as u32;
        self.states.push(State {
            len: self.states[self.last as usize].len + 1,
            link: NONE,
            next: [NONE; 2],
            first_end: self.text_len,
        });

        let mut p = self.last;
        while p != NONE && self.states[p as usize].next[c] == NONE {
            let st = &mut self.states[p as usize];
            st.next[c] = cur;
            if st.next[1 - c] != NONE {
                // transitions are never removed, so the deepest branch only grows
                self.deepest_branch = Some(self.deepest_branch.map_or(st.len, |t| t.max(st.len)));
            }
            p = st.link;
        }

        if p == NONE {
            self.states[cur as usize].link = 0;
        } else {
            let q = self.states[p as usize].next[c];
            let p_len = self.states[p as usize].len;
            if p_len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.states.len() as u32;
                let mut cloned = self.states[q as usize].clone();
                cloned.len = p_len + 1;
                self.states.push(cloned);
                while p != NONE && self.states[p as usize].next[c] == q {
                    self.states[p as usize].next[c] = clone;
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        self.last = cur;
    }

    /// Start positions `(j, n)`, `j < n`, of two occurrences of a factor of
    /// length [`deepest_branch`](Self::deepest_branch) that are followed by
    /// different symbols. Among all such pairs the smallest `j` wins, then
    /// the smallest `n`.
    pub fn branch_witness(&self) -> Option<(usize, usize, usize)> {
        let t = self.deepest_branch?;
        self.states
            .iter()
            .filter(|st| st.len == t && st.next[0] != NONE && st.next[1] != NONE)
            .map(|st| {
                // first occurrence of w·c starts at first_end(target) - (t + 1)
                let start =
                    |c: usize| (self.states[st.next[c] as usize].first_end - t - 1) as usize;
                let (a, b) = (start(0), start(1));
                (a.min(b), a.max(b))
            })
            .min()
            .map(|(j, n)| (j, n, t as usize))
    }
}

impl Extend<bool> for SuffixAutomaton {
    fn extend<I: IntoIterator<Item = bool>>(&mut self, iter: I) {
        for b in iter {
            SuffixAutomaton::extend(self, b);
        }
    }
}
