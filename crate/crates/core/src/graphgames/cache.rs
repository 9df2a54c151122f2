//! Versioned binary persistence of the component-value memo.
//!
//! Layout (little endian): magic `MDGCACHE`, `u32` version, `u32` node
//! count, then per node `u32` left count, left indices, `u32` right count,
//! right indices (indices refer to earlier nodes), then `u32` entry count
//! and per entry `u32` key length, key bytes, `u32` node index.

use std::collections::HashMap;
use std::io::{self, Read, Write};

use super::eval::Evaluator;
use super::rules::ComponentKey;
use crate::cgt::{GameId, GameStore};

const MAGIC: &[u8; 8] = b"MDGCACHE";
pub const CACHE_VERSION: u32 = 1;

/// What happened when reading a cache.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheLoad {
    Loaded { entries: usize },
    /// Wrong magic, version or a malformed body; nothing was imported.
    Ignored,
}

pub fn save(writer: &mut impl Write, store: &GameStore, evaluator: &Evaluator) -> io::Result<()> {
    let mut entries: Vec<(&ComponentKey, GameId)> = evaluator.memo_entries().collect();
    entries.sort();
    let mut nodes: Vec<GameId> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(_, g) in &entries {
        for h in store.subpositions(g) {
            if seen.insert(h) {
                nodes.push(h);
            }
        }
    }
    // Options always have smaller handles than the games that use them.
    nodes.sort();
    let position: HashMap<GameId, u32> = nodes.iter().enumerate().map(|(i, &g)| (g, i as u32)).collect();

    let mut buf = Vec::new();
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
    buf.extend_from_slice(&(nodes.len() as u32).to_le_bytes());
    for &g in &nodes {
        for side in [store.left_options(g), store.right_options(g)] {
            buf.extend_from_slice(&(side.len() as u32).to_le_bytes());
            for h in side {
                buf.extend_from_slice(&position[h].to_le_bytes());
            }
        }
    }
    buf.extend_from_slice(&(entries.len() as u32).to_le_bytes());
    for (key, g) in entries {
        buf.extend_from_slice(&(key.as_bytes().len() as u32).to_le_bytes());
        buf.extend_from_slice(key.as_bytes());
        buf.extend_from_slice(&position[&g].to_le_bytes());
    }
    writer.write_all(&buf)
}

struct Cursor<'a> {
    bytes: &'a [u8],
}

impl Cursor<'_> {
    fn take(&mut self, n: usize) -> Option<&[u8]> {
        if self.bytes.len() < n {
            return None;
        }
        let (head, tail) = self.bytes.split_at(n);
        self.bytes = tail;
        Some(head)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }
}

struct Decoded {
    nodes: Vec<(Vec<u32>, Vec<u32>)>,
    entries: Vec<(Vec<u8>, u32)>,
}

fn decode(bytes: &[u8]) -> Option<Decoded> {
    let mut cur = Cursor { bytes };
    if cur.take(MAGIC.len())? != MAGIC || cur.u32()? != CACHE_VERSION {
        return None;
    }
    let count = cur.u32()? as usize;
    let mut nodes = Vec::new();
    for i in 0..count {
        let mut sides = [Vec::new(), Vec::new()];
        for side in &mut sides {
            let len = cur.u32()? as usize;
            for _ in 0..len {
                let idx = cur.u32()?;
                if idx as usize >= i {
                    return None;
                }
                side.push(idx);
            }
        }
        let [l, r] = sides;
        nodes.push((l, r));
    }
    let entry_count = cur.u32()? as usize;
    let mut entries = Vec::new();
    for _ in 0..entry_count {
        let len = cur.u32()? as usize;
        let key = cur.take(len)?.to_vec();
        let idx = cur.u32()?;
        if key.is_empty() || idx as usize >= count {
            return None;
        }
        entries.push((key, idx));
    }
    cur.bytes.is_empty().then_some(Decoded { nodes, entries })
}

/// Imports a cache into the store and memo. Unreadable or mismatched
/// caches are ignored rather than partially applied.
pub fn load(reader: &mut impl Read, store: &mut GameStore, evaluator: &mut Evaluator) -> io::Result<CacheLoad> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    let Some(decoded) = decode(&bytes) else {
        return Ok(CacheLoad::Ignored);
    };
    let mut ids: Vec<GameId> = Vec::with_capacity(decoded.nodes.len());
    for (l, r) in decoded.nodes {
        let left = l.iter().map(|&i| ids[i as usize]).collect();
        let right = r.iter().map(|&i| ids[i as usize]).collect();
        // Re-canonicalising is idempotent on canonical input.
        let g = store.make_game(left, right).map_err(|e| io::Error::other(e.to_string()))?;
        ids.push(g);
    }
    let entries = decoded.entries.len();
    for (key, idx) in decoded.entries {
        evaluator.insert_memo(ComponentKey::from_bytes(key), ids[idx as usize]);
    }
    Ok(CacheLoad::Loaded { entries })
}
