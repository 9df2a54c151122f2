use std::fmt;

use serde::{Deserialize, Serialize};

use super::{DyadicRational, GameId, GameStore};

/// Conventional name of a game value, when it has one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ValueName {
    Number(DyadicRational),
    Nimber(u32),
    UpMultiple { count: i32, plus_star: bool },
    Other(String),
}

impl ValueName {
    pub fn is_other(&self) -> bool {
        matches!(self, ValueName::Other(_))
    }
}

impl fmt::Display for ValueName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueName::Number(x) => write!(f, "{x}"),
            ValueName::Nimber(1) => f.write_str("∗"),
            ValueName::Nimber(k) => write!(f, "∗{k}"),
            ValueName::UpMultiple { count, plus_star } => {
                let arrow = match count.abs() {
                    1 if *count > 0 => "↑".to_string(),
                    1 => "↓".to_string(),
                    2 if *count > 0 => "⇑".to_string(),
                    2 => "⇓".to_string(),
                    n if *count > 0 => format!("{n}·↑"),
                    n => format!("{n}·↓"),
                };
                f.write_str(&arrow)?;
                if *plus_star {
                    f.write_str("∗")?;
                }
                Ok(())
            }
            ValueName::Other(text) => f.write_str(text),
        }
    }
}

pub(super) fn name_of(store: &GameStore, g: GameId) -> ValueName {
    name_of_named(store, g).unwrap_or_else(|| ValueName::Other(render_form(store, g)))
}

fn name_of_named(store: &GameStore, g: GameId) -> Option<ValueName> {
    if let Some(x) = store.as_number(g) {
        Some(ValueName::Number(x))
    } else if let Some(k) = store.as_nimber(g) {
        Some(ValueName::Nimber(k))
    } else {
        store
            .as_up_multiple(g)
            .map(|(count, plus_star)| ValueName::UpMultiple { count, plus_star })
    }
}

pub(super) fn render(store: &GameStore, g: GameId) -> String {
    match name_of_named(store, g) {
        Some(name) => name.to_string(),
        None => render_form(store, g),
    }
}

pub(super) fn render_form(store: &GameStore, g: GameId) -> String {
    let side = |opts: &[GameId]| opts.iter().map(|&h| render(store, h)).collect::<Vec<_>>().join(",");
    format!("{{{}|{}}}", side(store.left_options(g)), side(store.right_options(g)))
}
