//! `--range` grammar: comma-separated `key=lo..hi` or `key=v`, keys `d` and `n`.

use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use arrangement_lab::statistics::VerifyParams;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamRange {
    pub d: Option<RangeInclusive<usize>>,
    pub n: Option<RangeInclusive<usize>>,
}

impl ParamRange {
    pub fn parse(text: &str) -> Result<Self> {
        let mut range = ParamRange::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').with_context(|| format!("expected key=range, got {part:?}"))?;
            let values = parse_span(value.trim()).with_context(|| format!("malformed range {value:?}"))?;
            let slot = match key.trim() {
                "d" => &mut range.d,
                "n" => &mut range.n,
                other => bail!("unknown range key {other:?} (expected d or n)"),
            };
            if slot.replace(values).is_some() {
                bail!("range key {key:?} given twice");
            }
        }
        if range.d.is_none() && range.n.is_none() {
            bail!("empty range {text:?}");
        }
        Ok(range)
    }

    /// Cartesian product in `d`-major order.
    pub fn grid(&self) -> Vec<VerifyParams> {
        let ds: Vec<Option<usize>> = self.d.clone().map_or(vec![None], |r| r.map(Some).collect());
        let ns: Vec<Option<usize>> = self.n.clone().map_or(vec![None], |r| r.map(Some).collect());
        ds.iter().flat_map(|&d| ns.iter().map(move |&n| VerifyParams { d, n })).collect()
    }
}

fn parse_span(value: &str) -> Result<RangeInclusive<usize>> {
    let (lo, hi) = match value.split_once("..") {
        Some((lo, hi)) => (lo.parse()?, hi.trim_start_matches('=').parse()?),
        None => {
            let v = value.parse()?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty span {lo}..{hi}");
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        let r = ParamRange::parse("n=4..6,d=2").unwrap();
        assert_eq!(r.d, Some(2..=2));
        assert_eq!(r.n, Some(4..=6));
        assert_eq!(r.grid().len(), 3);
        assert_eq!(r.grid()[0], VerifyParams::dn(2, 4));
    }

    #[test]
    fn single_key_grid() {
        let r = ParamRange::parse("d=2..6").unwrap();
        assert_eq!(r.grid(), (2..=6).map(VerifyParams::d).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "n", "n=", "n=4..", "x=1..2", "n=5..4", "n=1,n=2", "n=a..b"] {
            assert!(ParamRange::parse(bad).is_err(), "{bad}");
        }
    }
}
