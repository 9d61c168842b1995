//! Verification reports and the exhaustive scan that produces them.

use std::collections::BTreeMap;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::signed_perm::SignedPermutation;

/// An element on which a checked statement failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: SignedPermutation,
    pub detail: String,
}

/// Outcome of a verification run. Field order is fixed for stable JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    #[serde(rename = "theorem")]
    pub lemma_id: String,
    pub n: usize,
    /// Elements scanned, qualifying or not.
    pub universe: usize,
    /// Elements satisfying the hypotheses, i.e. actually tested.
    pub checked: usize,
    pub pass: bool,
    /// Passed with nothing to test.
    pub vacuous: bool,
    pub stats: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
}

/// The result of testing one qualifying element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Observation {
    pub holds: bool,
    pub detail: String,
    /// Labels counted into the report's `stats`.
    pub tags: Vec<&'static str>,
}

impl Observation {
    pub fn pass() -> Self {
        Self { holds: true, ..Self::default() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Self { holds: false, detail: detail.into(), tags: Vec::new() }
    }

    /// Passes when `cond` holds, otherwise fails with `detail()`.
    pub fn check(cond: bool, detail: impl FnOnce() -> String) -> Self {
        if cond {
            Self::pass()
        } else {
            Self::fail(detail())
        }
    }

    pub fn tag(mut self, tag: &'static str) -> Self {
        self.tags.push(tag);
        self
    }

    pub fn tag_if(self, cond: bool, tag: &'static str) -> Self {
        if cond {
            self.tag(tag)
        } else {
            self
        }
    }
}

fn map_elements<F>(universe: &[SignedPermutation], f: F) -> Vec<Option<Observation>>
where
    F: Fn(&SignedPermutation) -> Option<Observation> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        universe.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        universe.iter().map(f).collect()
    }
}

/// Tests `property` on every element of `universe` satisfying `qualify`.
/// Witnesses come out in universe order regardless of scheduling.
pub fn scan<Q, P>(
    lemma_id: &str,
    n: usize,
    universe: &[SignedPermutation],
    qualify: Q,
    property: P,
) -> LemmaReport
where
    Q: Fn(&SignedPermutation) -> bool + Sync + Send,
    P: Fn(&SignedPermutation) -> Observation + Sync + Send,
{
    let results = map_elements(universe, |w| qualify(w).then(|| property(w)));
    let mut stats = BTreeMap::new();
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for (w, obs) in universe.iter().zip(results) {
        let Some(obs) = obs else { continue };
        checked += 1;
        for tag in &obs.tags {
            *stats.entry(tag.to_string()).or_insert(0) += 1;
        }
        if !obs.holds {
            witnesses.push(Witness { element: w.clone(), detail: obs.detail });
        }
    }
    LemmaReport {
        lemma_id: lemma_id.to_string(),
        n,
        universe: universe.len(),
        checked,
        pass: witnesses.is_empty(),
        vacuous: checked == 0,
        stats,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_perm::all;

    #[test]
    fn scan_counts_and_orders_witnesses() {
        let universe: Vec<_> = all(2).unwrap().collect();
        let report = scan(
            "demo",
            2,
            &universe,
            |w| w.length() >= 2,
            |w| Observation::check(w.length() != 3, || "length three".into()).tag("seen"),
        );
        assert_eq!(report.universe, 8);
        assert_eq!(report.checked, 5);
        assert_eq!(report.stats["seen"], 5);
        assert_eq!(report.witnesses.len(), 2);
        assert!(!report.pass && !report.vacuous);
        let mut sorted = report.witnesses.clone();
        sorted.sort_by_key(|w| w.element.index());
        assert_eq!(sorted, report.witnesses);

        let empty = scan("demo", 2, &universe, |_| false, |_| Observation::fail("never"));
        assert!(empty.pass && empty.vacuous);
    }

    #[test]
    fn json_field_order_is_fixed() {
        let universe: Vec<_> = all(1).unwrap().collect();
        let report = scan("demo", 1, &universe, |_| true, |_| Observation::pass());
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.starts_with(r#"{"theorem":"demo","n":1,"universe":2,"checked":2,"pass":true,"vacuous":false,"stats":{},"witnesses":[]"#));
        let back: LemmaReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }
}
