//! Versioned JSON files holding a chamber system and, for buildings, its
//! distance table.
//!
//! ```json
//! {"format": 1, "type": "flag", "params": {"n": 3, "p": 2},
//!  "coxeter": "1 2\n", "chambers": [...],
//!  "partitions": {"1": [[0, 1, 2], ...], ...}, "delta": [["e", "s1", ...], ...]}
//! ```

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::building::WMetricBuilding;
use crate::chamber::ChamberSystem;
use crate::coxeter::{parse_symbol, CoxeterMatrix, CoxeterSystem, DEFAULT_CAP};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Artifact {
    pub format: u32,
    #[serde(rename = "type")]
    pub kind: String,
    pub params: BTreeMap<String, Value>,
    /// Symbol text of the Coxeter matrix, when one is attached.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coxeter: Option<String>,
    pub chambers: Vec<String>,
    pub partitions: BTreeMap<String, Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<String>>>,
}

impl Artifact {
    pub fn from_chamber_system(
        kind: &str,
        params: BTreeMap<String, Value>,
        cs: &ChamberSystem,
        coxeter: Option<&CoxeterMatrix>,
    ) -> Self {
        let partitions = cs
            .colors()
            .iter()
            .enumerate()
            .map(|(k, color)| (color.to_string(), cs.panels(k).to_vec()))
            .collect();
        Artifact {
            format: FORMAT_VERSION,
            kind: kind.to_string(),
            params,
            coxeter: coxeter.map(CoxeterMatrix::to_symbol_text),
            chambers: (0..cs.len()).map(|c| cs.label(c)).collect(),
            partitions,
            delta: None,
        }
    }

    pub fn from_building(kind: &str, params: BTreeMap<String, Value>, b: &WMetricBuilding) -> Self {
        let cm = b.system().matrix();
        let mut out = Self::from_chamber_system(kind, params, b.chambers(), Some(cm));
        let n = b.len();
        out.delta = Some(
            (0..n)
                .map(|c| (0..n).map(|d| cm.format_word(b.delta(c, d).word())).collect())
                .collect(),
        );
        out
    }

    pub fn has_delta(&self) -> bool {
        self.delta.is_some()
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("artifact serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let artifact: Artifact = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        if artifact.format != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "format {} is not supported (expected {FORMAT_VERSION})",
                artifact.format
            )));
        }
        Ok(artifact)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// A numeric parameter.
    pub fn param(&self, key: &str) -> Option<u64> {
        self.params.get(key).and_then(Value::as_u64)
    }

    pub fn coxeter_matrix(&self) -> Result<Option<CoxeterMatrix>> {
        self.coxeter.as_deref().map(parse_symbol).transpose()
    }

    pub fn chamber_system(&self) -> Result<ChamberSystem> {
        let mut colors = Vec::new();
        let mut partitions = Vec::new();
        for (key, classes) in &self.partitions {
            colors.push(
                key.parse::<usize>()
                    .map_err(|_| Error::Format(format!("color {key:?} is not a number")))?,
            );
            partitions.push(classes.clone());
        }
        // keys sort as strings; restore numeric color order
        let mut order: Vec<usize> = (0..colors.len()).collect();
        order.sort_by_key(|&k| colors[k]);
        let colors: Vec<usize> = order.iter().map(|&k| colors[k]).collect();
        let partitions: Vec<Vec<Vec<usize>>> = order.iter().map(|&k| partitions[k].clone()).collect();
        ChamberSystem::from_partitions(self.chambers.len(), colors, partitions)
            .map_err(|e| Error::Format(e.to_string()))?
            .with_labels(self.chambers.clone())
    }

    /// The building, re-validated; `Ok(None)` when no table is stored.
    pub fn building(&self) -> Result<Option<WMetricBuilding>> {
        let Some(rows) = &self.delta else {
            return Ok(None);
        };
        let cm = self
            .coxeter_matrix()?
            .ok_or_else(|| Error::Format("delta table without a Coxeter matrix".into()))?;
        let system = Arc::new(CoxeterSystem::new(cm.clone(), DEFAULT_CAP)?);
        let cs = self.chamber_system()?;
        let n = cs.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Format(format!("delta table is not {n} x {n}")));
        }
        let mut delta = Vec::with_capacity(n * n);
        for row in rows {
            for text in row {
                let word = cm.parse_word(text)?;
                let element = system.canonical(word.as_slice());
                if element.word() != &word {
                    return Err(Error::Format(format!("{text:?} is not in canonical form")));
                }
                delta.push(element);
            }
        }
        WMetricBuilding::new(cs, system, delta).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::check_b2;
    use crate::complex::build_coxeter_complex;
    use crate::flag::build_flag_building;

    fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, Value> {
        pairs.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect()
    }

    #[test]
    fn round_trip_flag() {
        let fb = build_flag_building(3, 2).unwrap();
        let a = Artifact::from_building("flag", params(&[("n", 3), ("p", 2)]), fb.building());
        let text = a.to_json();
        let back = Artifact::from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.chambers.len(), 21);
        let b = back.building().unwrap().unwrap();
        assert_eq!(b.delta_table(), fb.building().delta_table());
        assert!(check_b2(&b).pass);
        assert_eq!(back.param("n"), Some(3));
    }

    #[test]
    fn chamber_system_without_delta() {
        let cc = build_coxeter_complex(&CoxeterMatrix::type_a(2), 100).unwrap();
        let a = Artifact::from_chamber_system("coxeter", BTreeMap::new(), cc.chambers(), None);
        assert!(!a.to_json().contains("delta"));
        assert!(a.building().unwrap().is_none());
        let cs = a.chamber_system().unwrap();
        assert_eq!(cs.len(), 6);
        assert_eq!(cs.colors(), &[1, 2]);
    }

    #[test]
    fn many_colors_keep_numeric_order() {
        let text: String = (1..=10).map(|i| format!("{i}\n")).collect();
        let cm = parse_symbol(&text).unwrap();
        let parts: Vec<Vec<Vec<usize>>> = (0..10).map(|_| vec![vec![0]]).collect();
        let cs = ChamberSystem::from_partitions(1, (1..=10).collect(), parts).unwrap();
        let a = Artifact::from_chamber_system("coxeter", BTreeMap::new(), &cs, Some(&cm));
        let back = a.chamber_system().unwrap();
        assert_eq!(back.colors(), (1..=10).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(Artifact::from_json("{"), Err(Error::Format(_))));
        let fb = build_flag_building(2, 2).unwrap();
        let mut a = Artifact::from_building("flag", params(&[("n", 2), ("p", 2)]), fb.building());
        a.format = 2;
        assert!(matches!(Artifact::from_json(&a.to_json()), Err(Error::Format(_))));
        a.format = 1;
        a.delta.as_mut().unwrap()[0][1] = "s1 s1".into();
        assert!(a.building().is_err());
        assert!(matches!(Artifact::load(Path::new("/nonexistent/x.json")), Err(Error::Io(_))));
    }
}
