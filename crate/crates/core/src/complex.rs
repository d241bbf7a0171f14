//! The Coxeter complex of a finite Coxeter system: chambers are the group
//! elements, `g ∼_i g·s_i`, and `δ_W(g, h) = g⁻¹h`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chamber::ChamberSystem;
use crate::coxeter::{CayleyGraph, CoxeterElement, CoxeterMatrix, CoxeterSystem};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CoxeterComplex {
    system: Arc<CoxeterSystem>,
    chambers: ChamberSystem,
}

pub fn build_coxeter_complex(cm: &CoxeterMatrix, cap: usize) -> Result<CoxeterComplex> {
    CoxeterComplex::new(Arc::new(CoxeterSystem::new(cm.clone(), cap)?))
}

impl CoxeterComplex {
    pub fn new(system: Arc<CoxeterSystem>) -> Result<Self> {
        let cayley = system
            .cayley()
            .ok_or_else(|| Error::Invalid("the Coxeter complex needs a finite group".into()))?;
        let colors = system.matrix().labels().to_vec();
        let chambers = ChamberSystem::from_keys(cayley.len(), colors, |i, g| {
            g.min(cayley.succ(g, i))
        })
        .with_labels((0..cayley.len()).map(|g| system.element(g).to_string()).collect())?;
        Ok(CoxeterComplex { system, chambers })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn chambers(&self) -> &ChamberSystem {
        &self.chambers
    }

    pub fn cayley(&self) -> &CayleyGraph {
        self.system.cayley().expect("finite by construction")
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn element(&self, g: usize) -> CoxeterElement {
        self.system.element(g)
    }

    /// Cayley index of `g⁻¹h`.
    pub fn delta_index(&self, g: usize, h: usize) -> usize {
        let c = self.cayley();
        c.multiply(c.inverse(g), h)
    }

    pub fn delta_w(&self, g: usize, h: usize) -> Result<CoxeterElement> {
        if g >= self.len() || h >= self.len() {
            return Err(Error::OutOfRange(format!(
                "chambers {g}, {h} of {}",
                self.len()
            )));
        }
        Ok(self.element(self.delta_index(g, h)))
    }

    /// Largest gallery distance, i.e. the length of the longest element.
    pub fn diameter(&self) -> usize {
        self.system.longest_length().unwrap_or(0)
    }
}

/// Size of the `{i, j}`-residue of the identity for each color pair `i < j`
/// (labels). Left translation acts transitively on chambers, so every
/// residue of a given type has this size.
pub fn residue_circuit_lengths(cc: &CoxeterComplex) -> BTreeMap<(usize, usize), usize> {
    let cs = cc.chambers();
    let mut out = BTreeMap::new();
    for a in 0..cs.rank() {
        for b in (a + 1)..cs.rank() {
            let size = cs.residue_at(0, &[a, b]).len();
            out.insert((cs.colors()[a], cs.colors()[b]), size);
        }
    }
    out
}
