//! Named example graphs: the small hand-drawn instances and the c-fat family.

use crate::error::{Error, Result};
use crate::generate::cfat;
use crate::graph::Graph;
use crate::io::parse_edgelist;

const EDGELISTS: [(&str, &str); 5] = [
    ("FIG3", include_str!("../fixtures/fig3.edges")),
    ("FIG4", include_str!("../fixtures/fig4.edges")),
    ("FIG5", include_str!("../fixtures/fig5.edges")),
    ("FIG6", include_str!("../fixtures/fig6.edges")),
    ("T1", include_str!("../fixtures/t1.edges")),
];

const CFAT: [(&str, usize, f64); 7] = [
    ("c-fat200-1", 200, 1.0),
    ("c-fat200-2", 200, 2.0),
    ("c-fat200-5", 200, 5.0),
    ("c-fat500-1", 500, 1.0),
    ("c-fat500-2", 500, 2.0),
    ("c-fat500-5", 500, 5.0),
    ("c-fat500-10", 500, 10.0),
];

pub fn fixture_names() -> Vec<&'static str> {
    EDGELISTS.iter().map(|(name, _)| *name).chain(CFAT.iter().map(|(name, _, _)| *name)).collect()
}

/// Looks up a fixture by name, ignoring case.
pub fn fixture(name: &str) -> Result<Graph> {
    if let Some((_, text)) = EDGELISTS.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)) {
        return parse_edgelist(text);
    }
    let stem = name.strip_suffix(".clq").unwrap_or(name);
    if let Some(&(_, n, c)) = CFAT.iter().find(|(n, _, _)| n.eq_ignore_ascii_case(stem)) {
        return cfat(n, c);
    }
    Err(Error::UnknownFixture(name.to_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expected = [("FIG3", 12), ("FIG4", 30), ("FIG5", 14), ("FIG6", 39), ("T1", 47), ("c-fat200-1", 200)];
        for (name, n) in expected {
            assert_eq!(fixture(name).unwrap().vertex_count(), n, "{name}");
        }
        assert_eq!(fixture("fig3").unwrap(), fixture("FIG3").unwrap());
        assert!(matches!(fixture("FIG9"), Err(Error::UnknownFixture(_))));
        assert_eq!(fixture_names().len(), 12);
    }
}
