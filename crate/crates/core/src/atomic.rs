//! Far-star comparisons and atomic weights of all-small games.
//!
//! Far star is not a short game, so it is represented by a nimber `*N`
//! remote from the game under study. `N` starts two above the largest
//! nimber appearing among the game's subpositions (and is at least 4), and
//! every answer is confirmed to be the same at `*N` and `*(N+1)`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::cgt::{GameId, GameStore, Outcome, Relation};
use crate::error::{Error, Result};

/// Order of a game relative to far star.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StarOrder {
    GreaterThanFarStar,
    LessThanFarStar,
    ConfusedWithFarStar,
}

impl StarOrder {
    pub fn negate(self) -> Self {
        match self {
            StarOrder::GreaterThanFarStar => StarOrder::LessThanFarStar,
            StarOrder::LessThanFarStar => StarOrder::GreaterThanFarStar,
            StarOrder::ConfusedWithFarStar => StarOrder::ConfusedWithFarStar,
        }
    }
}

/// Atomic weight as a canonical game, with its integer value when it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AtomicWeight {
    pub value: GameId,
    pub is_integer: bool,
    pub integer_value: Option<i64>,
}

impl AtomicWeight {
    fn from_game(store: &GameStore, value: GameId) -> Self {
        let integer_value = store.as_integer(value);
        Self { value, is_integer: integer_value.is_some(), integer_value }
    }

    pub fn display<'a>(&self, store: &'a GameStore) -> impl fmt::Display + 'a {
        DisplayWeight { aw: *self, store }
    }
}

struct DisplayWeight<'a> {
    aw: AtomicWeight,
    store: &'a GameStore,
}

impl fmt::Display for DisplayWeight<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.aw.integer_value {
            Some(n) => write!(f, "{n}"),
            None => f.write_str(&self.store.render(self.aw.value)),
        }
    }
}

/// Memoizing atomic-weight calculator.
#[derive(Debug, Default)]
pub struct AtomicCalculator {
    memo: HashMap<GameId, AtomicWeight>,
    remote_override: Option<u32>,
}

impl AtomicCalculator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Forces the first remote-star order tried. The `N`/`N+1` stability
    /// check still applies.
    pub fn with_remote_star(order: Option<u32>) -> Self {
        Self { memo: HashMap::new(), remote_override: order }
    }

    /// Remote-star order used for `g`.
    pub fn remote_order(&self, store: &GameStore, g: GameId) -> u32 {
        if let Some(n) = self.remote_override {
            return n;
        }
        let largest = store.subpositions(g).into_iter().filter_map(|h| store.as_nimber(h)).max().unwrap_or(0);
        2 + largest.max(2)
    }

    fn star_relation(&self, store: &mut GameStore, g: GameId) -> Result<Relation> {
        let n = self.remote_order(store, g);
        let near = store.nimber(n);
        let far = store.nimber(n + 1);
        let a = store.compare(g, near)?;
        let b = store.compare(g, far)?;
        if a != b || a == Relation::Equal {
            return Err(Error::RemoteStarUnstable { order: n });
        }
        Ok(a)
    }

    pub fn remote_star_order(&self, store: &mut GameStore, g: GameId) -> Result<StarOrder> {
        if !store.is_all_small(g) {
            return Err(Error::NotAllSmall);
        }
        Ok(match self.star_relation(store, g)? {
            Relation::Greater => StarOrder::GreaterThanFarStar,
            Relation::Less => StarOrder::LessThanFarStar,
            _ => StarOrder::ConfusedWithFarStar,
        })
    }

    /// Atomic weight by the atomic weight calculus: `{AW(G^L)-2 | AW(G^R)+2}`
    /// unless that is an integer, in which case the far-star comparison
    /// picks between `0`, the bound `x` from the Left side and `y` from the
    /// Right side.
    pub fn atomic_weight(&mut self, store: &mut GameStore, g: GameId) -> Result<AtomicWeight> {
        if let Some(&aw) = self.memo.get(&g) {
            return Ok(aw);
        }
        if !store.is_all_small(g) {
            return Err(Error::NotAllSmall);
        }
        let two = store.integer(2);
        let minus_two = store.integer(-2);
        let mut left = Vec::new();
        for gl in store.left_options(g).to_vec() {
            let aw = self.atomic_weight(store, gl)?;
            left.push(store.add(aw.value, minus_two)?);
        }
        let mut right = Vec::new();
        for gr in store.right_options(g).to_vec() {
            let aw = self.atomic_weight(store, gr)?;
            right.push(store.add(aw.value, two)?);
        }
        let candidate = store.make_game(left.clone(), right.clone())?;
        let value = if store.as_integer(candidate).is_some() && !(left.is_empty() && right.is_empty()) {
            match self.remote_star_order(store, g)? {
                StarOrder::ConfusedWithFarStar => store.zero(),
                StarOrder::GreaterThanFarStar => {
                    let y = greatest_integer_below(store, &right)?;
                    store.integer(y)
                }
                StarOrder::LessThanFarStar => {
                    let x = least_integer_above(store, &left)?;
                    store.integer(x)
                }
            }
        } else {
            candidate
        };
        let aw = AtomicWeight::from_game(store, value);
        self.memo.insert(g, aw);
        Ok(aw)
    }

    /// `g` and `h` are far-star equivalent iff `down + * < g - h < up + *`
    /// with `*` remote.
    pub fn far_star_equivalent(&self, store: &mut GameStore, g: GameId, h: GameId) -> Result<bool> {
        if !store.is_all_small(g) || !store.is_all_small(h) {
            return Err(Error::NotAllSmall);
        }
        let diff = store.subtract(g, h)?;
        let n = self
            .remote_order(store, diff)
            .max(self.remote_order(store, g))
            .max(self.remote_order(store, h));
        let near = within_star_band(store, diff, n)?;
        let far = within_star_band(store, diff, n + 1)?;
        if near != far {
            return Err(Error::RemoteStarUnstable { order: n });
        }
        Ok(near)
    }
}

fn within_star_band(store: &mut GameStore, d: GameId, n: u32) -> Result<bool> {
    let remote = store.nimber(n);
    let up = store.up();
    let down = store.down();
    let upper = store.add(up, remote)?;
    let lower = store.add(down, remote)?;
    Ok(store.compare(lower, d)? == Relation::Less && store.compare(d, upper)? == Relation::Less)
}

/// Integer bound on the games: every short game lies strictly between
/// `-(b+1)` and `b+1` for its birthday `b`.
fn integer_bound(store: &GameStore, games: &[GameId]) -> i64 {
    games.iter().map(|&g| i64::from(store.birthday(g))).max().unwrap_or(0) + 2
}

/// Least integer `x` with `l ⊲ x` (not `x <= l`) for every `l`.
fn least_integer_above(store: &mut GameStore, games: &[GameId]) -> Result<i64> {
    let bound = integer_bound(store, games);
    for x in -bound..=bound {
        let xg = store.integer(x);
        let mut ok = true;
        for &l in games {
            if store.leq(xg, l)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(x);
        }
    }
    unreachable!("integers beyond the birthday bound exceed every option")
}

/// Greatest integer `y` with `r ⊳ y` (not `r <= y`) for every `r`.
fn greatest_integer_below(store: &mut GameStore, games: &[GameId]) -> Result<i64> {
    let bound = integer_bound(store, games);
    for y in (-bound..=bound).rev() {
        let yg = store.integer(y);
        let mut ok = true;
        for &r in games {
            if store.leq(r, yg)? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(y);
        }
    }
    unreachable!("integers beyond the birthday bound are below every option")
}

/// Outcome implied by an integer atomic weight alone, when it decides one.
pub fn two_ahead_bound(aw: &AtomicWeight) -> Result<Option<Outcome>> {
    let n = aw.integer_value.ok_or(Error::NotInteger)?;
    Ok(match n {
        n if n >= 2 => Some(Outcome::LeftWins),
        n if n <= -2 => Some(Outcome::RightWins),
        _ => None,
    })
}
