//! Exact arithmetic on short partizan games.
//!
//! Every game lives in a [`GameStore`] as a hash-consed node in canonical
//! form, so two handles are equal exactly when the games are equal.

mod dyadic;
mod name;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dyadic::DyadicRational;
pub use name::ValueName;

/// Handle to a canonical game interned in a [`GameStore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GameId(u32);

impl GameId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Winner under optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    LeftWins,
    RightWins,
    FirstPlayerWins,
    SecondPlayerWins,
}

impl Outcome {
    /// Combines "does the first mover win" for each possible first mover.
    pub fn from_first_mover_wins(left_first_wins: bool, right_first_wins: bool) -> Self {
        match (left_first_wins, right_first_wins) {
            (true, false) => Outcome::LeftWins,
            (false, true) => Outcome::RightWins,
            (true, true) => Outcome::FirstPlayerWins,
            (false, false) => Outcome::SecondPlayerWins,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::LeftWins => "LeftWins",
            Outcome::RightWins => "RightWins",
            Outcome::FirstPlayerWins => "FirstPlayerWins",
            Outcome::SecondPlayerWins => "SecondPlayerWins",
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of comparing two games in the partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Equal,
    Greater,
    Confused,
}

impl Relation {
    pub fn reverse(self) -> Self {
        match self {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            other => other,
        }
    }
}

#[derive(Debug, Clone)]
struct Node {
    left: Box<[GameId]>,
    right: Box<[GameId]>,
    birthday: u32,
    all_small: bool,
    number: Option<DyadicRational>,
    nimber: Option<u32>,
    /// `(n, star)` when the game is `n.up` or `n.up + *`.
    up: Option<(i32, bool)>,
}

#[derive(Debug, Default)]
struct LeqMemo {
    map: HashMap<(GameId, GameId), bool>,
    cap: Option<usize>,
}

impl LeqMemo {
    fn insert(&mut self, key: (GameId, GameId), value: bool) -> Result<()> {
        if let Some(cap) = self.cap {
            if self.map.len() >= cap {
                return Err(Error::MemoCapExceeded { cap });
            }
        }
        self.map.insert(key, value);
        Ok(())
    }
}

type OptionSets = (Box<[GameId]>, Box<[GameId]>);

/// Interning store for canonical short games.
///
/// Reads (`left_options`, `birthday`, naming) take `&self`; everything that
/// may intern a node or extend a memo takes `&mut self`.
#[derive(Debug)]
pub struct GameStore {
    nodes: Vec<Node>,
    index: HashMap<OptionSets, GameId>,
    leq_memo: LeqMemo,
    add_memo: HashMap<(GameId, GameId), GameId>,
    neg_memo: HashMap<GameId, GameId>,
}

impl Default for GameStore {
    fn default() -> Self {
        Self::new()
    }
}

impl GameStore {
    pub fn new() -> Self {
        let mut store = Self {
            nodes: Vec::new(),
            index: HashMap::new(),
            leq_memo: LeqMemo::default(),
            add_memo: HashMap::new(),
            neg_memo: HashMap::new(),
        };
        let zero = store.intern(Vec::new(), Vec::new());
        debug_assert_eq!(zero, GameId(0));
        store
    }

    /// Store whose comparison memo fails with [`Error::MemoCapExceeded`]
    /// once it holds `cap` entries.
    pub fn with_memo_cap(cap: Option<usize>) -> Self {
        let mut store = Self::new();
        store.leq_memo.cap = cap;
        store
    }

    pub fn set_memo_cap(&mut self, cap: Option<usize>) {
        self.leq_memo.cap = cap;
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn zero(&self) -> GameId {
        GameId(0)
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].left
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].right
    }

    pub fn birthday(&self, g: GameId) -> u32 {
        self.nodes[g.index()].birthday
    }

    /// Every subposition has Left options exactly when it has Right options.
    pub fn is_all_small(&self, g: GameId) -> bool {
        self.nodes[g.index()].all_small
    }

    pub fn as_number(&self, g: GameId) -> Option<DyadicRational> {
        self.nodes[g.index()].number
    }

    pub fn as_integer(&self, g: GameId) -> Option<i64> {
        self.as_number(g).and_then(|x| x.as_integer())
    }

    pub fn as_nimber(&self, g: GameId) -> Option<u32> {
        self.nodes[g.index()].nimber
    }

    pub(crate) fn as_up_multiple(&self, g: GameId) -> Option<(i32, bool)> {
        self.nodes[g.index()].up
    }

    /// Iterates over `g` and all its subpositions, each visited once.
    pub fn subpositions(&self, g: GameId) -> Vec<GameId> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![g];
        let mut out = Vec::new();
        while let Some(h) = stack.pop() {
            if std::mem::replace(&mut seen[h.index()], true) {
                continue;
            }
            out.push(h);
            stack.extend(self.left_options(h).iter().chain(self.right_options(h)));
        }
        out
    }

    /// Interns an already-canonical option pair without simplification.
    fn intern(&mut self, mut left: Vec<GameId>, mut right: Vec<GameId>) -> GameId {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let key = (left.into_boxed_slice(), right.into_boxed_slice());
        if let Some(&id) = self.index.get(&key) {
            return id;
        }
        let id = GameId(u32::try_from(self.nodes.len()).expect("game store overflow"));
        let node = self.describe(&key.0, &key.1);
        self.nodes.push(node);
        self.index.insert(key, id);
        id
    }

    fn describe(&self, left: &[GameId], right: &[GameId]) -> Node {
        let opts = || left.iter().chain(right).map(|g| &self.nodes[g.index()]);
        let birthday = opts().map(|n| n.birthday + 1).max().unwrap_or(0);
        let all_small = left.is_empty() == right.is_empty() && opts().all(|n| n.all_small);

        let number = if opts().all(|n| n.number.is_some()) {
            let lower = left.iter().filter_map(|&g| self.as_number(g)).max();
            let upper = right.iter().filter_map(|&g| self.as_number(g)).min();
            match (lower, upper) {
                (Some(lo), Some(hi)) if lo >= hi => None,
                _ => Some(DyadicRational::simplest_between(lower, upper)),
            }
        } else {
            None
        };

        let nimber = if left == right {
            let mut heaps: Vec<u32> = left.iter().filter_map(|&g| self.as_nimber(g)).collect();
            heaps.sort_unstable();
            let contiguous = heaps.len() == left.len() && heaps.iter().enumerate().all(|(i, &k)| k as usize == i);
            contiguous.then_some(heaps.len() as u32)
        } else {
            None
        };

        let up = self.describe_up(left, right);

        Node {
            left: left.into(),
            right: right.into(),
            birthday,
            all_small,
            number,
            nimber,
            up,
        }
    }

    /// Recognises the canonical shapes of `n.up` and `n.up + *`:
    /// `{0|*}`, `{0,*|0}`, `{0|(n-1).up*}` and `{0|(n-1).up}`, plus mirrors.
    fn describe_up(&self, left: &[GameId], right: &[GameId]) -> Option<(i32, bool)> {
        let zero = GameId(0);
        let is_star = |g: GameId| self.as_nimber(g) == Some(1);
        match (left, right) {
            ([l], [r]) if *l == zero && is_star(*r) => Some((1, false)),
            ([l], [r]) if is_star(*l) && *r == zero => Some((-1, false)),
            ([a, b], [r]) if *a == zero && is_star(*b) && *r == zero => Some((1, true)),
            ([l], [a, b]) if *l == zero && *a == zero && is_star(*b) => Some((-1, true)),
            ([l], [r]) if *l == zero => match self.as_up_multiple(*r) {
                Some((m, star)) if m >= 1 => Some((m + 1, !star)),
                _ => None,
            },
            ([l], [r]) if *r == zero => match self.as_up_multiple(*l) {
                Some((m, star)) if m <= -1 => Some((m - 1, !star)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Builds `{left | right}` and reduces it to canonical form.
    pub fn make_game(&mut self, left: Vec<GameId>, right: Vec<GameId>) -> Result<GameId> {
        let mut left = left;
        let mut right = right;
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        loop {
            self.remove_dominated(&mut left, true)?;
            self.remove_dominated(&mut right, false)?;
            if self.bypass_one_left(&mut left, &right)? {
                continue;
            }
            if self.bypass_one_right(&left, &mut right)? {
                continue;
            }
            break;
        }
        Ok(self.intern(left, right))
    }

    fn remove_dominated(&mut self, options: &mut Vec<GameId>, left_side: bool) -> Result<()> {
        let mut keep = vec![true; options.len()];
        for i in 0..options.len() {
            for j in 0..options.len() {
                if i == j || !keep[j] {
                    continue;
                }
                // Distinct canonical handles are distinct values, so <= is strict here.
                let dominated = if left_side {
                    self.leq(options[i], options[j])?
                } else {
                    self.leq(options[j], options[i])?
                };
                if dominated {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut k = keep.iter();
        options.retain(|_| *k.next().unwrap());
        Ok(())
    }

    /// Replaces the first reversible Left option, if any. `G^L` reverses
    /// through `G^LR` when `G^LR <= G`.
    fn bypass_one_left(&mut self, left: &mut Vec<GameId>, right: &[GameId]) -> Result<bool> {
        for i in 0..left.len() {
            let gl = left[i];
            for k in 0..self.right_options(gl).len() {
                let glr = self.right_options(gl)[k];
                if self.leq_id_form(glr, left, right)? {
                    let replacement = self.left_options(glr).to_vec();
                    left.swap_remove(i);
                    left.extend(replacement);
                    left.sort_unstable();
                    left.dedup();
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn bypass_one_right(&mut self, left: &[GameId], right: &mut Vec<GameId>) -> Result<bool> {
        for i in 0..right.len() {
            let gr = right[i];
            for k in 0..self.left_options(gr).len() {
                let grl = self.left_options(gr)[k];
                if self.leq_form_id(left, right, grl)? {
                    let replacement = self.right_options(grl).to_vec();
                    right.swap_remove(i);
                    right.extend(replacement);
                    right.sort_unstable();
                    right.dedup();
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// `{left | right} <= h` for a not-yet-interned form.
    fn leq_form_id(&mut self, left: &[GameId], right: &[GameId], h: GameId) -> Result<bool> {
        for &gl in left {
            if self.leq(h, gl)? {
                return Ok(false);
            }
        }
        for k in 0..self.right_options(h).len() {
            let hr = self.right_options(h)[k];
            if self.leq_id_form(hr, left, right)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `h <= {left | right}` for a not-yet-interned form.
    fn leq_id_form(&mut self, h: GameId, left: &[GameId], right: &[GameId]) -> Result<bool> {
        for k in 0..self.left_options(h).len() {
            let hl = self.left_options(h)[k];
            if self.leq_form_id(left, right, hl)? {
                return Ok(false);
            }
        }
        for &gr in right {
            if self.leq(gr, h)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `a <= b`: no `a^L` with `b <= a^L` and no `b^R` with `b^R <= a`.
    pub fn leq(&mut self, a: GameId, b: GameId) -> Result<bool> {
        if a == b {
            return Ok(true);
        }
        if let (Some(x), Some(y)) = (self.as_number(a), self.as_number(b)) {
            return Ok(x <= y);
        }
        if let Some(&known) = self.leq_memo.map.get(&(a, b)) {
            return Ok(known);
        }
        let mut result = true;
        for k in 0..self.left_options(a).len() {
            let al = self.left_options(a)[k];
            if self.leq(b, al)? {
                result = false;
                break;
            }
        }
        if result {
            for k in 0..self.right_options(b).len() {
                let br = self.right_options(b)[k];
                if self.leq(br, a)? {
                    result = false;
                    break;
                }
            }
        }
        self.leq_memo.insert((a, b), result)?;
        Ok(result)
    }

    pub fn compare(&mut self, a: GameId, b: GameId) -> Result<Relation> {
        if a == b {
            return Ok(Relation::Equal);
        }
        Ok(match (self.leq(a, b)?, self.leq(b, a)?) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            (false, false) => Relation::Confused,
        })
    }

    pub fn outcome(&mut self, g: GameId) -> Result<Outcome> {
        let zero = self.zero();
        Ok(match self.compare(g, zero)? {
            Relation::Greater => Outcome::LeftWins,
            Relation::Less => Outcome::RightWins,
            Relation::Equal => Outcome::SecondPlayerWins,
            Relation::Confused => Outcome::FirstPlayerWins,
        })
    }

    pub fn negate(&mut self, g: GameId) -> GameId {
        if let Some(&n) = self.neg_memo.get(&g) {
            return n;
        }
        let left: Vec<GameId> = self.right_options(g).to_vec().into_iter().map(|r| self.negate(r)).collect();
        let right: Vec<GameId> = self.left_options(g).to_vec().into_iter().map(|l| self.negate(l)).collect();
        let n = self.intern(left, right);
        self.neg_memo.insert(g, n);
        self.neg_memo.insert(n, g);
        n
    }

    /// Disjunctive sum.
    pub fn add(&mut self, a: GameId, b: GameId) -> Result<GameId> {
        let zero = self.zero();
        if a == zero {
            return Ok(b);
        }
        if b == zero {
            return Ok(a);
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(&s) = self.add_memo.get(&key) {
            return Ok(s);
        }
        let sum = match (self.as_number(a), self.as_number(b)) {
            (Some(x), Some(y)) => self.number(x.checked_add(y)),
            (Some(_), None) => self.translate(b, a)?,
            (None, Some(_)) => self.translate(a, b)?,
            (None, None) => {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for al in self.left_options(a).to_vec() {
                    left.push(self.add(al, b)?);
                }
                for bl in self.left_options(b).to_vec() {
                    left.push(self.add(a, bl)?);
                }
                for ar in self.right_options(a).to_vec() {
                    right.push(self.add(ar, b)?);
                }
                for br in self.right_options(b).to_vec() {
                    right.push(self.add(a, br)?);
                }
                self.make_game(left, right)?
            }
        };
        self.add_memo.insert(key, sum);
        Ok(sum)
    }

    /// `g + x` for a number `x` and a non-number `g`: only `g` needs to move.
    fn translate(&mut self, g: GameId, x: GameId) -> Result<GameId> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for gl in self.left_options(g).to_vec() {
            left.push(self.add(gl, x)?);
        }
        for gr in self.right_options(g).to_vec() {
            right.push(self.add(gr, x)?);
        }
        self.make_game(left, right)
    }

    pub fn subtract(&mut self, a: GameId, b: GameId) -> Result<GameId> {
        let nb = self.negate(b);
        self.add(a, nb)
    }

    pub fn integer(&mut self, n: i64) -> GameId {
        let mut g = self.zero();
        for _ in 0..n.unsigned_abs() {
            g = if n > 0 { self.intern(vec![g], vec![]) } else { self.intern(vec![], vec![g]) };
        }
        g
    }

    /// Canonical form of a dyadic rational.
    pub fn number(&mut self, x: DyadicRational) -> GameId {
        if let Some(n) = x.as_integer() {
            return self.integer(n);
        }
        let e = x.exponent();
        let lower = self.number(DyadicRational::new(x.numerator() - 1, e));
        let upper = self.number(DyadicRational::new(x.numerator() + 1, e));
        self.intern(vec![lower], vec![upper])
    }

    /// Nim heap `*k`.
    pub fn nimber(&mut self, k: u32) -> GameId {
        let heaps: Vec<GameId> = (0..k).map(|i| self.nimber(i)).collect();
        self.intern(heaps.clone(), heaps)
    }

    pub fn star(&mut self) -> GameId {
        self.nimber(1)
    }

    pub fn up(&mut self) -> GameId {
        let (zero, star) = (self.zero(), self.star());
        self.intern(vec![zero], vec![star])
    }

    pub fn down(&mut self) -> GameId {
        let up = self.up();
        self.negate(up)
    }

    /// `n.up`, optionally plus `*`, built by repeated addition.
    pub fn up_multiple(&mut self, n: i32, plus_star: bool) -> Result<GameId> {
        let unit = if n >= 0 { self.up() } else { self.down() };
        let mut g = if plus_star { self.star() } else { self.zero() };
        for _ in 0..n.unsigned_abs() {
            g = self.add(g, unit)?;
        }
        Ok(g)
    }

    pub fn name_value(&self, g: GameId) -> ValueName {
        name::name_of(self, g)
    }

    /// Brace rendering with named subgames shown by name.
    pub fn render(&self, g: GameId) -> String {
        name::render(self, g)
    }

    /// Like [`render`](Self::render) but always expands the top level.
    pub fn render_form(&self, g: GameId) -> String {
        name::render_form(self, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_game_examples() {
        let mut s = GameStore::new();
        let zero = s.zero();
        assert_eq!(s.make_game(vec![], vec![]).unwrap(), zero);
        let star = s.make_game(vec![zero], vec![zero]).unwrap();
        assert_eq!(s.as_nimber(star), Some(1));
        let up_star = s.make_game(vec![star, zero], vec![zero]).unwrap();
        assert_eq!(s.name_value(up_star), ValueName::UpMultiple { count: 1, plus_star: true });
    }

    #[test]
    fn leq_examples() {
        let mut s = GameStore::new();
        let (zero, up, star) = (s.zero(), s.up(), s.star());
        let up_star = s.add(up, star).unwrap();
        assert!(s.leq(zero, up).unwrap());
        assert!(!s.leq(zero, star).unwrap());
        assert!(s.leq(star, up_star).unwrap());
    }

    #[test]
    fn compare_examples() {
        let mut s = GameStore::new();
        let (zero, up, star) = (s.zero(), s.up(), s.star());
        assert_eq!(s.compare(up, zero).unwrap(), Relation::Greater);
        assert_eq!(s.compare(star, star).unwrap(), Relation::Equal);
        assert_eq!(s.compare(up, star).unwrap(), Relation::Confused);
    }

    #[test]
    fn arithmetic_examples() {
        let mut s = GameStore::new();
        let (zero, up, star, down) = (s.zero(), s.up(), s.star(), s.down());
        assert_eq!(s.add(star, star).unwrap(), zero);
        assert_eq!(s.negate(up), down);
        let up_star = s.add(up, star).unwrap();
        assert_eq!(s.add(up_star, star).unwrap(), up);
        let raw_up = s.make_game(vec![zero], vec![star]).unwrap();
        assert_eq!(raw_up, up);
    }

    #[test]
    fn outcome_examples() {
        let mut s = GameStore::new();
        let (zero, up, star) = (s.zero(), s.up(), s.star());
        assert_eq!(s.outcome(zero).unwrap(), Outcome::SecondPlayerWins);
        assert_eq!(s.outcome(star).unwrap(), Outcome::FirstPlayerWins);
        assert_eq!(s.outcome(up).unwrap(), Outcome::LeftWins);
    }

    #[test]
    fn all_small_examples() {
        let mut s = GameStore::new();
        let (star, up, one) = (s.star(), s.up(), s.integer(1));
        let up_star = s.add(up, star).unwrap();
        assert!(s.is_all_small(star));
        assert!(!s.is_all_small(one));
        assert!(s.is_all_small(up_star));
    }

    #[test]
    fn switch_is_not_a_number() {
        let mut s = GameStore::new();
        let (zero, one) = (s.zero(), s.integer(1));
        let g = s.make_game(vec![one], vec![zero]).unwrap();
        assert_eq!(s.name_value(g), ValueName::Other(s.render_form(g)));
        let g = s.make_game(vec![zero], vec![one]).unwrap();
        assert_eq!(s.name_value(g), ValueName::Number(DyadicRational::new(1, 1)));
    }

    #[test]
    fn reversible_options_are_bypassed() {
        let mut s = GameStore::new();
        let half = s.number(DyadicRational::new(1, 1));
        let g = s.make_game(vec![half], vec![]).unwrap();
        assert_eq!(s.as_integer(g), Some(1));
        let minus_one = s.integer(-1);
        let g = s.make_game(vec![minus_one], vec![]).unwrap();
        assert_eq!(g, s.zero());
    }

    #[test]
    fn memo_cap_fails_loudly() {
        let mut s = GameStore::with_memo_cap(Some(0));
        let (up, star) = (s.up(), s.star());
        assert_eq!(s.compare(up, star), Err(Error::MemoCapExceeded { cap: 0 }));
    }
}
