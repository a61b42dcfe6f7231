//! Nondeterministic automata over `{+, -}`.
//!
//! A graph compiles to an automaton whose language is exactly the set of
//! words `x` with `p(x) -> G`: states are vertices, every state is initial
//! and accepting, and an edge `(u, v)` gives `u -+-> v` and `v --> u`.
//! Linear loop patterns `u w* t` compile to small automata, and the product
//! construction finds the shortest word two automata share.

use std::collections::VecDeque;
use std::fmt;

use crate::digraph::DiGraph;
use crate::error::{Error, Result};
use crate::pathwords::{Sign, Word};

pub type State = usize;

fn letter_index(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

const LETTERS: [Sign; 2] = [Sign::Plus, Sign::Minus];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    states: usize,
    transitions: Vec<(State, Sign, State)>,
    initial: Vec<State>,
    accepting: Vec<State>,
    // delta[state][letter] -> successor states
    delta: Vec<[Vec<State>; 2]>,
    is_accepting: Vec<bool>,
}

impl Nfa {
    pub fn new(
        states: usize,
        transitions: impl IntoIterator<Item = (State, Sign, State)>,
        initial: impl IntoIterator<Item = State>,
        accepting: impl IntoIterator<Item = State>,
    ) -> Result<Nfa> {
        let check = |q: State| {
            if q < states {
                Ok(q)
            } else {
                Err(Error::VertexOutOfRange { vertex: q, n: states })
            }
        };
        let mut transitions: Vec<_> =
            transitions.into_iter().map(|(p, s, q)| Ok((check(p)?, s, check(q)?))).collect::<Result<_>>()?;
        transitions.sort_unstable();
        transitions.dedup();
        let sorted = |it: Vec<State>| {
            let mut v = it;
            v.sort_unstable();
            v.dedup();
            v
        };
        let initial = sorted(initial.into_iter().map(check).collect::<Result<_>>()?);
        let accepting = sorted(accepting.into_iter().map(check).collect::<Result<_>>()?);

        let mut delta = vec![[Vec::new(), Vec::new()]; states];
        for &(p, s, q) in &transitions {
            delta[p][letter_index(s)].push(q);
        }
        let mut is_accepting = vec![false; states];
        for &q in &accepting {
            is_accepting[q] = true;
        }
        Ok(Nfa { states, transitions, initial, accepting, delta, is_accepting })
    }

    /// One state looping on both letters: accepts every word.
    pub fn all_words() -> Nfa {
        Nfa::new(1, [(0, Sign::Plus, 0), (0, Sign::Minus, 0)], [0], [0]).expect("valid")
    }

    /// The automaton recognising `{x : p(x) -> g}`.
    pub fn of_graph(g: &DiGraph) -> Nfa {
        let transitions = g.edges().iter().flat_map(|&(u, v)| [(u, Sign::Plus, v), (v, Sign::Minus, u)]);
        Nfa::new(g.n(), transitions, 0..g.n(), 0..g.n()).expect("graph states in range")
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    pub fn transitions(&self) -> &[(State, Sign, State)] {
        &self.transitions
    }

    pub fn initial(&self) -> &[State] {
        &self.initial
    }

    pub fn accepting(&self) -> &[State] {
        &self.accepting
    }

    pub fn successors(&self, q: State, s: Sign) -> &[State] {
        &self.delta[q][letter_index(s)]
    }

    pub fn is_accepting(&self, q: State) -> bool {
        self.is_accepting[q]
    }

    /// Subset simulation.
    pub fn accepts(&self, x: &Word) -> bool {
        let mut current = vec![false; self.states];
        for &q in &self.initial {
            current[q] = true;
        }
        for &s in x.letters() {
            let mut next = vec![false; self.states];
            let mut any = false;
            for q in (0..self.states).filter(|&q| current[q]) {
                for &r in self.successors(q, s) {
                    next[r] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            current = next;
        }
        (0..self.states).any(|q| current[q] && self.is_accepting[q])
    }
}

pub fn nfa_of_graph(g: &DiGraph) -> Nfa {
    Nfa::of_graph(g)
}

pub fn accepts(a: &Nfa, x: &Word) -> bool {
    a.accepts(x)
}

impl fmt::Display for Nfa {
    /// `states t`, then `src letter dst` lines, then the initial and
    /// accepting lists.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.states, self.transitions.len())?;
        for &(p, s, q) in &self.transitions {
            writeln!(f, "{p} {} {q}", s.as_char())?;
        }
        let list = |v: &[State]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(f, "initial {}", list(&self.initial))?;
        writeln!(f, "accepting {}", list(&self.accepting))
    }
}

/// The language `{ prefix · body^k · suffix : k >= 0 }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopPattern {
    prefix: Word,
    body: Word,
    suffix: Word,
}

impl LoopPattern {
    pub fn new(prefix: Word, body: Word, suffix: Word) -> Result<LoopPattern> {
        if body.is_empty() {
            return Err(Error::EmptyLoopBody);
        }
        Ok(LoopPattern { prefix, body, suffix })
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn body(&self) -> &Word {
        &self.body
    }

    pub fn suffix(&self) -> &Word {
        &self.suffix
    }

    /// The member with `k` loop iterations.
    pub fn expand(&self, k: usize) -> Word {
        self.prefix.concat(&self.body.power(k)).concat(&self.suffix)
    }

    /// Recovers `k` from a member's length.
    pub fn iterations_for_len(&self, len: usize) -> Option<usize> {
        let fixed = self.prefix.len() + self.suffix.len();
        let extra = len.checked_sub(fixed)?;
        (extra % self.body.len() == 0).then_some(extra / self.body.len())
    }
}

/// Chain of states for the prefix ending at a hub, a cycle through the hub
/// reading the body, and a chain from the hub reading the suffix.
pub fn family_nfa(pattern: &LoopPattern) -> Nfa {
    let mut transitions = Vec::new();
    let mut next_state = 1;
    let mut chain = |from: State, word: &[Sign], to: Option<State>, transitions: &mut Vec<_>| -> State {
        let mut cur = from;
        for (i, &s) in word.iter().enumerate() {
            let target = match to {
                Some(t) if i + 1 == word.len() => t,
                _ => {
                    next_state += 1;
                    next_state - 1
                }
            };
            transitions.push((cur, s, target));
            cur = target;
        }
        cur
    };
    let hub = chain(0, pattern.prefix.letters(), None, &mut transitions);
    chain(hub, pattern.body.letters(), Some(hub), &mut transitions);
    let last = chain(hub, pattern.suffix.letters(), None, &mut transitions);
    Nfa::new(next_state, transitions, [0], [last]).expect("pattern states in range")
}

/// A word accepted by two automata together with accepting runs of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonRun {
    pub word: Word,
    pub left: Vec<State>,
    pub right: Vec<State>,
}

/// Breadth-first search over the product automaton; the returned word is a
/// shortest one accepted by both.
pub fn shortest_common_run(a: &Nfa, b: &Nfa) -> Option<CommonRun> {
    let width = b.states;
    let index = |p: State, q: State| p * width + q;
    let mut parent: Vec<Option<(usize, Sign)>> = vec![None; a.states * width];
    let mut seen = vec![false; a.states * width];
    let mut queue = VecDeque::new();
    for &p in &a.initial {
        for &q in &b.initial {
            seen[index(p, q)] = true;
            queue.push_back((p, q));
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        if a.is_accepting[p] && b.is_accepting[q] {
            let mut letters = Vec::new();
            let mut left = vec![p];
            let mut right = vec![q];
            let mut cur = index(p, q);
            while let Some((prev, s)) = parent[cur] {
                letters.push(s);
                left.push(prev / width);
                right.push(prev % width);
                cur = prev;
            }
            letters.reverse();
            left.reverse();
            right.reverse();
            return Some(CommonRun { word: Word::new(letters), left, right });
        }
        for s in LETTERS {
            for &p2 in a.successors(p, s) {
                for &q2 in b.successors(q, s) {
                    let i = index(p2, q2);
                    if !seen[i] {
                        seen[i] = true;
                        parent[i] = Some((index(p, q), s));
                        queue.push_back((p2, q2));
                    }
                }
            }
        }
    }
    None
}

pub fn intersect_nonempty(a: &Nfa, b: &Nfa) -> Option<Word> {
    shortest_common_run(a, b).map(|run| run.word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathwords::word;

    fn d3() -> DiGraph {
        DiGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    fn p_pattern(s: usize) -> LoopPattern {
        LoopPattern::new(Word::plus(s), word("-").concat(&Word::plus(s - 1)), word("+")).unwrap()
    }

    #[test]
    fn loop_vertex_accepts_everything() {
        let a = Nfa::of_graph(&DiGraph::loop_vertex());
        assert!(Word::all_up_to(6).all(|x| a.accepts(&x)));
    }

    #[test]
    fn single_edge_automaton() {
        let a = Nfa::of_graph(&word("+").path());
        assert!(a.accepts(&word("+")));
        assert!(a.accepts(&word("-")));
        assert!(a.accepts(&word("+-+-")));
        assert!(!a.accepts(&word("++")));
        assert!(!a.accepts(&word("--")));
    }

    #[test]
    fn d3_directed_paths() {
        let a = Nfa::of_graph(&d3());
        assert!(a.accepts(&word("+++")));
        assert!(!a.accepts(&word("++++")));
    }

    #[test]
    fn epsilon_needs_initial_accepting_state() {
        assert!(Nfa::all_words().accepts(&Word::empty()));
        let a = Nfa::new(2, [(0, Sign::Plus, 1)], [0], [1]).unwrap();
        assert!(!a.accepts(&Word::empty()));
        assert!(!Nfa::of_graph(&DiGraph::empty(0)).accepts(&Word::empty()));
    }

    #[test]
    fn rejects_bad_states() {
        assert!(Nfa::new(1, [(0, Sign::Plus, 1)], [0], [0]).is_err());
    }

    #[test]
    fn empty_loop_body_rejected() {
        assert_eq!(LoopPattern::new(Word::empty(), Word::empty(), Word::empty()), Err(Error::EmptyLoopBody));
    }

    #[test]
    fn plus_star_pattern() {
        let a = family_nfa(&LoopPattern::new(word("+"), word("+"), Word::empty()).unwrap());
        assert!(!a.accepts(&Word::empty()));
        for k in 1..8 {
            assert!(a.accepts(&Word::plus(k)));
        }
        assert!(!a.accepts(&word("+-")));
    }

    #[test]
    fn path_family_members() {
        let pat = p_pattern(3);
        let a = family_nfa(&pat);
        for k in 0..=10 {
            assert!(a.accepts(&pat.expand(k)));
        }
        assert_eq!(pat.expand(2), word("+++-++-+++"));
        assert!(!a.accepts(&word("+++-++")));
        assert!(a.accepts(&word("+++-+++")));
        assert!(!a.accepts(&word("++-+++")));
        assert_eq!(pat.iterations_for_len(10), Some(2));
        assert_eq!(pat.iterations_for_len(9), None);
    }

    #[test]
    fn type_pattern_from_path_family() {
        // +(+^{s-1}-)^k +^i
        let s = 3;
        for i in 0..=s {
            let pat = LoopPattern::new(word("+"), Word::plus(s - 1).concat(&word("-")), Word::plus(i)).unwrap();
            let a = family_nfa(&pat);
            for k in 0..6 {
                assert!(a.accepts(&pat.expand(k)));
            }
            assert!(!a.accepts(&word("-")));
        }
    }

    #[test]
    fn product_search() {
        let all = Nfa::all_words();
        assert_eq!(intersect_nonempty(&all, &all), Some(Word::empty()));
        let fam = family_nfa(&p_pattern(3));
        assert_eq!(intersect_nonempty(&fam, &Nfa::of_graph(&d3())), None);
        // P^3_1 itself: the witness is that member.
        let member = p_pattern(3).expand(1);
        let run = shortest_common_run(&fam, &Nfa::of_graph(&member.path())).unwrap();
        assert_eq!(run.word, member);
        assert_eq!(run.right, (0..=member.len()).collect::<Vec<_>>());
    }

    #[test]
    fn display_format() {
        let a = Nfa::of_graph(&word("+").path());
        assert_eq!(a.to_string(), "2 2\n0 + 1\n1 - 0\ninitial 0 1\naccepting 0 1\n");
    }
}
