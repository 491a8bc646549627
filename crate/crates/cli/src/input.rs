//! Resolution of algebra, ideal and variety arguments.

use std::path::Path;

use relcomm_core::corpus::{self, CorpusEntry, Source};
use relcomm_core::{ideal_closure, Elem, Ideal, VarietyDescriptor};

use crate::CliError;

/// Loads `arg` as a file if one exists there, otherwise as a bundled table
/// (`s3`, `s3.tbl`) or a generated loop id (`loop5-12`).
pub fn load(arg: &str) -> Result<CorpusEntry, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?;
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| arg.to_string());
        let mut entry = CorpusEntry::from_text(id, Source::File, &text).map_err(|e| CliError::Core {
            context: format!("{arg}: "),
            error: e,
        })?;
        // A file that is byte-for-byte a bundled table keeps its named ideals.
        if let Ok(b) = corpus::bundled(&entry.id) {
            if b.algebra.mul_table() == entry.algebra.mul_table() {
                entry.named_ideals = b.named_ideals;
            }
        }
        return Ok(entry);
    }
    if let Some(entry) = generated(arg)? {
        return Ok(entry);
    }
    corpus::bundled(arg).map_err(|_| {
        CliError::Input(format!(
            "{arg}: no such file, bundled table ({}) or generated loop id (loopN-I)",
            corpus::bundled_names().collect::<Vec<_>>().join(", ")
        ))
    })
}

fn generated(arg: &str) -> Result<Option<CorpusEntry>, CliError> {
    let Some(rest) = arg.strip_prefix("loop") else {
        return Ok(None);
    };
    let Some((order, index)) = rest.split_once('-') else {
        return Ok(None);
    };
    let (Ok(order), Ok(index)) = (order.parse::<usize>(), index.parse::<usize>()) else {
        return Ok(None);
    };
    let loops = corpus::loops_of_order(order).map_err(|e| CliError::Core {
        context: format!("{arg}: "),
        error: e,
    })?;
    loops
        .get(index)
        .cloned()
        .map(Some)
        .ok_or_else(|| CliError::Input(format!("{arg}: there are only {} loops of order {order}", loops.len())))
}

/// An ideal given as `full`, `trivial`, a named ideal of the entry, or a
/// comma-separated list of generating elements.
pub fn ideal(entry: &CorpusEntry, arg: &str) -> Result<Ideal, CliError> {
    let a = &entry.algebra;
    let trimmed = arg.trim();
    match trimmed.to_ascii_lowercase().as_str() {
        "full" => return Ok(Ideal::full(a)),
        "trivial" | "" => return Ok(Ideal::trivial(a)),
        _ => {}
    }
    if let Some(named) = entry.named_ideal(trimmed) {
        return Ok(named);
    }
    let mut gens: Vec<Elem> = Vec::new();
    for part in trimmed.split(',') {
        let part = part.trim();
        let e: Elem = part.parse().map_err(|_| {
            let names: Vec<&str> = entry.named_ideals.iter().map(|(n, _)| n.as_str()).collect();
            CliError::Input(format!(
                "ideal {arg:?}: expected full, trivial, a named ideal {names:?} or element indices"
            ))
        })?;
        if e as usize >= a.order() {
            return Err(CliError::Input(format!(
                "ideal {arg:?}: element {e} is outside 0..{}",
                a.order()
            )));
        }
        gens.push(e);
    }
    Ok(ideal_closure(a, &gens))
}

/// A built-in variety name, or `@path` for a word file.
pub fn variety(arg: &str) -> Result<VarietyDescriptor, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
        let stem = Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.to_string());
        return VarietyDescriptor::from_word_file(&stem, &text).map_err(|e| CliError::Core {
            context: format!("{path}: "),
            error: e,
        });
    }
    VarietyDescriptor::by_name(arg).map_err(|e| CliError::Core {
        context: String::new(),
        error: e,
    })
}
