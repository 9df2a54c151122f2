//! Serializable results for the command line front end.

use std::collections::HashMap;

use serde::Serialize;

use crate::atomic::{two_ahead_bound, StarOrder};
use crate::cgt::{GameId, GameStore, Outcome, ValueName};
use crate::engine::Engine;
use crate::error::Result;
use crate::graphgames::VariantKind;

/// A canonical form as a DAG. Nodes are listed options-first, so every
/// option index is smaller than the index of the node using it; `root` is
/// the last node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameDag {
    pub root: usize,
    pub nodes: Vec<DagNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DagNode {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub name: String,
}

impl GameDag {
    pub fn of(store: &GameStore, g: GameId) -> Self {
        let mut ids = store.subpositions(g);
        ids.sort();
        let index: HashMap<GameId, usize> = ids.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let nodes = ids
            .iter()
            .map(|&h| DagNode {
                left: store.left_options(h).iter().map(|o| index[o]).collect(),
                right: store.right_options(h).iter().map(|o| index[o]).collect(),
                name: store.render(h),
            })
            .collect();
        GameDag { root: index[&g], nodes }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ValueReport {
    pub input: String,
    pub variant: VariantKind,
    /// Canonical form with the top level written out.
    pub form: String,
    /// Conventional name, or the form itself.
    pub value: String,
    pub name: ValueName,
    pub outcome: Outcome,
    pub birthday: u32,
    pub all_small: bool,
    pub canonical: GameDag,
}

impl ValueReport {
    pub fn new(engine: &mut Engine, input: String, variant: VariantKind, g: GameId) -> Result<Self> {
        let store = &engine.store;
        let (form, value, name) = (store.render_form(g), store.render(g), store.name_value(g));
        let (birthday, all_small, canonical) = (store.birthday(g), store.is_all_small(g), GameDag::of(store, g));
        let outcome = engine.outcome(g)?;
        Ok(Self { input, variant, form, value, name, outcome, birthday, all_small, canonical })
    }

    pub fn text(&self) -> String {
        if self.name.is_other() {
            format!("{}, outcome: {}", self.form, self.outcome)
        } else {
            format!("{} = {}, outcome: {}", self.form, self.value, self.outcome)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AwReport {
    pub input: String,
    pub variant: VariantKind,
    pub value: String,
    pub atomic_weight: String,
    pub integer: Option<i64>,
    pub star_order: StarOrder,
    /// Outcome forced by the atomic weight alone, when it forces one.
    pub two_ahead: Option<Outcome>,
    pub outcome: Outcome,
}

impl AwReport {
    pub fn new(engine: &mut Engine, input: String, variant: VariantKind, g: GameId) -> Result<Self> {
        let aw = engine.atomic_weight(g)?;
        let star_order = engine.remote_star_order(g)?;
        let outcome = engine.outcome(g)?;
        let two_ahead = if aw.is_integer { two_ahead_bound(&aw)? } else { None };
        Ok(Self {
            input,
            variant,
            value: engine.store.render(g),
            atomic_weight: aw.display(&engine.store).to_string(),
            integer: aw.integer_value,
            star_order,
            two_ahead,
            outcome,
        })
    }

    pub fn text(&self) -> String {
        let mut s = format!("{}, value {}, {:?}", self.atomic_weight, self.value, self.star_order);
        if let Some(o) = self.two_ahead {
            s.push_str(&format!(", two ahead: {o}"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dag_lists_options_first() {
        let mut s = GameStore::new();
        let up = s.up();
        let dag = GameDag::of(&s, up);
        assert_eq!(dag.nodes.len(), 3);
        assert_eq!(dag.root, 2);
        assert_eq!(dag.nodes[2].name, "↑");
        for (i, node) in dag.nodes.iter().enumerate() {
            assert!(node.left.iter().chain(&node.right).all(|&o| o < i));
        }
    }

    #[test]
    fn name_json_shape() {
        let json = serde_json::to_value(ValueName::Nimber(1)).unwrap();
        assert_eq!(json, serde_json::json!({"kind": "nimber", "value": 1}));
        let json = serde_json::to_value(ValueName::UpMultiple { count: 1, plus_star: true }).unwrap();
        assert_eq!(json, serde_json::json!({"kind": "up_multiple", "value": {"count": 1, "plus_star": true}}));
    }
}
