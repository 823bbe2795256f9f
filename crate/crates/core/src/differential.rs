//! Main algorithms against the oracles on one `(G, p)`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::cellular::{is_p_perfect, is_strongly_closed, o_sub_a, omega_bar_in};
use crate::oracle::{self, ElementSet};
use crate::subgroup::{centralizer, normalizer, sylow_subgroup};
use crate::{Group, Result, Subgroup};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Comparison {
    pub checked: Vec<&'static str>,
    pub mismatches: Vec<&'static str>,
}

impl Comparison {
    fn record(&mut self, what: &'static str, agree: bool) {
        self.checked.push(what);
        if !agree {
            self.mismatches.push(what);
        }
    }

    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn same(main: &Subgroup, naive: &ElementSet) -> Result<bool> {
    Ok(&oracle::elements(main)? == naive)
}

/// Compares `is_p_perfect`, and when `p` divides `|G|` also `N_G(S)`,
/// `C_G(S)`, `C_G(ω̄S)`, `ω̄S` and `O_{ω̄S}(G)` for the Sylow subgroup `S`
/// chosen by the main code. Errors if `G` exceeds the oracle cap.
pub fn compare(g: &Arc<Group>, p: u64) -> Result<Comparison> {
    let mut c = Comparison::default();
    c.record("is_p_perfect", is_p_perfect(g, p)? == oracle::naive_is_p_perfect(g, p)?);
    if !g.order().is_multiple_of(p as u128) {
        return Ok(c);
    }
    let s = sylow_subgroup(g, p)?;
    let s_set = oracle::elements(&s)?;
    c.record("normalizer", same(&normalizer(g, &s)?, &oracle::naive_normalizer(g, &s_set)?)?);
    c.record(
        "centralizer",
        same(&centralizer(g, s.generators())?, &oracle::naive_centralizer(g, &s_set)?)?,
    );
    let ob = omega_bar_in(g, s.clone(), p)?;
    let a_set = oracle::naive_omega_bar(g, &s_set, p)?;
    c.record("omega_bar", same(&ob.subgroup, &a_set)?);
    c.record(
        "omega_bar_centralizer",
        same(&centralizer(g, ob.subgroup.generators())?, &oracle::naive_centralizer(g, &a_set)?)?,
    );
    let all = oracle::elements(g)?;
    c.record(
        "strongly_closed",
        is_strongly_closed(g, &s, &ob.subgroup)? == oracle::naive_is_strongly_closed(&all, &s_set, &a_set),
    );
    let oa = o_sub_a(g, &ob.subgroup, p)?;
    c.record("o_sub_a", same(&oa.subgroup, &oracle::naive_o_sub_a(g, &a_set, p)?)?);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn agrees_on_small_groups() {
        for (g, p) in [
            (catalog::symmetric(4).unwrap(), 2),
            (catalog::psl2(7).unwrap(), 2),
            (catalog::cyclic(12).unwrap(), 3),
            (catalog::cyclic(12).unwrap(), 5),
        ] {
            let c = compare(&Arc::new(g), p).unwrap();
            assert!(c.agrees(), "{:?}", c.mismatches);
        }
    }
}
