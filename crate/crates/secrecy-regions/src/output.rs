//! Region and scalar result documents.
//!
//! CSV documents carry `# key: value` metadata lines followed by data rows;
//! JSON documents carry the same metadata as a string map. Numbers are
//! written with 12 significant digits, and parsing followed by re-serializing
//! reproduces a document byte for byte, so every emitted figure can be
//! regenerated from its own header.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polytope::{hull2d, RatePoint, Region2D};

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Usage(format!("unknown format {other:?}, use csv or json"))),
        }
    }
}

/// 12 significant digits, scientific notation.
pub fn fmt_sig(v: f64) -> String {
    format!("{:.11e}", v)
}

fn parse_f64(tok: &str, what: &str) -> Result<f64> {
    tok.trim()
        .parse::<f64>()
        .map_err(|_| Error::Parse(format!("{what}: bad number {tok:?}")))
}

fn meta_csv(meta: &BTreeMap<String, String>, out: &mut String) {
    for (k, v) in meta {
        out.push_str("# ");
        out.push_str(k);
        out.push_str(": ");
        out.push_str(v);
        out.push('\n');
    }
}

fn meta_json(meta: &BTreeMap<String, String>) -> String {
    let mut s = String::from("{");
    for (i, (k, v)) in meta.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&serde_json::to_string(k).expect("string"));
        s.push(':');
        s.push_str(&serde_json::to_string(v).expect("string"));
    }
    s.push('}');
    s
}

fn split_meta_and_rows(text: &str) -> Result<(BTreeMap<String, String>, Vec<&str>)> {
    let mut meta = BTreeMap::new();
    let mut rows = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# ") {
            let (k, v) = rest
                .split_once(": ")
                .ok_or_else(|| Error::Parse(format!("bad metadata line {line:?}")))?;
            meta.insert(k.to_owned(), v.to_owned());
        } else if !line.trim().is_empty() {
            rows.push(line);
        }
    }
    Ok((meta, rows))
}

#[derive(serde::Deserialize)]
struct RegionJson {
    hull: Vec<[f64; 2]>,
    #[serde(default)]
    meta: BTreeMap<String, String>,
}

/// A region result: ordered hull vertices plus a metadata header.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionDocument {
    pub meta: BTreeMap<String, String>,
    pub hull: Vec<[f64; 2]>,
}

impl RegionDocument {
    pub fn new(meta: impl IntoIterator<Item = (String, String)>, region: &Region2D) -> Self {
        Self {
            meta: meta.into_iter().collect(),
            hull: region.vertices().iter().map(|p| [p.r1, p.r2]).collect(),
        }
    }

    /// Reconstructs the region (idempotent with respect to serialization).
    pub fn region(&self) -> Result<Region2D> {
        let pts: Vec<RatePoint> = self.hull.iter().map(|v| RatePoint::new(v[0], v[1])).collect();
        hull2d(&pts)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        meta_csv(&self.meta, &mut out);
        for v in &self.hull {
            out.push_str(&fmt_sig(v[0]));
            out.push(',');
            out.push_str(&fmt_sig(v[1]));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"hull\":[");
        for (i, v) in self.hull.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push('[');
            s.push_str(&fmt_sig(v[0]));
            s.push(',');
            s.push_str(&fmt_sig(v[1]));
            s.push(']');
        }
        s.push_str("],\"meta\":");
        s.push_str(&meta_json(&self.meta));
        s.push_str("}\n");
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let (meta, rows) = split_meta_and_rows(text)?;
        let mut hull = Vec::with_capacity(rows.len());
        for row in rows {
            let (a, b) = row
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad vertex row {row:?}")))?;
            hull.push([parse_f64(a, "r1")?, parse_f64(b, "r2")?]);
        }
        Ok(Self { meta, hull })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RegionJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("region json: {e}")))?;
        Ok(Self {
            meta: doc.meta,
            hull: doc.hull,
        })
    }

    pub fn parse(text: &str, format: OutputFormat) -> Result<Self> {
        match format {
            OutputFormat::Csv => Self::from_csv(text),
            OutputFormat::Json => Self::from_json(text),
        }
    }
}

#[derive(serde::Deserialize)]
struct ScalarJson {
    #[serde(default)]
    meta: BTreeMap<String, String>,
    #[serde(default)]
    split: Option<[f64; 6]>,
    value: f64,
}

/// A scalar result (sum rate or reduction rate), optionally with the power
/// split that attains it.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarDocument {
    pub meta: BTreeMap<String, String>,
    pub value: f64,
    pub split: Option<[f64; 6]>,
}

impl ScalarDocument {
    pub fn new(
        meta: impl IntoIterator<Item = (String, String)>,
        value: f64,
        split: Option<[f64; 6]>,
    ) -> Self {
        Self {
            meta: meta.into_iter().collect(),
            value,
            split,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        meta_csv(&self.meta, &mut out);
        out.push_str("value,");
        out.push_str(&fmt_sig(self.value));
        out.push('\n');
        if let Some(s) = &self.split {
            out.push_str("split");
            for v in s {
                out.push(',');
                out.push_str(&fmt_sig(*v));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = String::from("{\"meta\":");
        s.push_str(&meta_json(&self.meta));
        s.push_str(",\"split\":");
        match &self.split {
            None => s.push_str("null"),
            Some(sp) => {
                s.push('[');
                for (i, v) in sp.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    s.push_str(&fmt_sig(*v));
                }
                s.push(']');
            }
        }
        s.push_str(",\"value\":");
        s.push_str(&fmt_sig(self.value));
        s.push_str("}\n");
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let (meta, rows) = split_meta_and_rows(text)?;
        let mut value = None;
        let mut split = None;
        for row in rows {
            let mut toks = row.split(',');
            match toks.next() {
                Some("value") => {
                    let v = toks
                        .next()
                        .ok_or_else(|| Error::Parse("value row missing number".into()))?;
                    value = Some(parse_f64(v, "value")?);
                }
                Some("split") => {
                    let vals: Vec<f64> = toks
                        .map(|t| parse_f64(t, "split"))
                        .collect::<Result<_>>()?;
                    let arr: [f64; 6] = vals
                        .try_into()
                        .map_err(|_| Error::Parse("split row needs six numbers".into()))?;
                    split = Some(arr);
                }
                other => {
                    return Err(Error::Parse(format!("unexpected row {other:?}")));
                }
            }
        }
        Ok(Self {
            meta,
            value: value.ok_or_else(|| Error::Parse("document has no value row".into()))?,
            split,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ScalarJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("scalar json: {e}")))?;
        Ok(Self {
            meta: doc.meta,
            value: doc.value,
            split: doc.split,
        })
    }

    pub fn parse(text: &str, format: OutputFormat) -> Result<Self> {
        match format {
            OutputFormat::Csv => Self::from_csv(text),
            OutputFormat::Json => Self::from_json(text),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_region_doc() -> RegionDocument {
        let region = hull2d(&[RatePoint::new(0.25, 0.5), RatePoint::new(0.4, 0.1)]).unwrap();
        RegionDocument::new(
            [
                ("result".to_owned(), "partial-df-secrecy-region".to_owned()),
                ("channel".to_owned(), r#"{"h1":0.6,"p1":1.0}"#.to_owned()),
                ("steps".to_owned(), "21".to_owned()),
            ],
            &region,
        )
    }

    #[test]
    fn csv_round_trip_is_byte_exact() {
        let doc = sample_region_doc();
        let text = doc.to_csv();
        let parsed = RegionDocument::from_csv(&text).unwrap();
        assert_eq!(parsed.to_csv(), text);
        assert_eq!(parsed, doc);
    }

    #[test]
    fn json_round_trip_is_byte_exact() {
        let doc = sample_region_doc();
        let text = doc.to_json();
        let parsed = RegionDocument::from_json(&text).unwrap();
        assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn scalar_round_trips() {
        let doc = ScalarDocument::new(
            [("result".to_owned(), "sum-rate".to_owned())],
            0.3085908565824062,
            Some([0.25, 0.75, 0.0, 0.25, 0.75, 0.0]),
        );
        let csv = doc.to_csv();
        assert_eq!(ScalarDocument::from_csv(&csv).unwrap().to_csv(), csv);
        let json = doc.to_json();
        assert_eq!(ScalarDocument::from_json(&json).unwrap().to_json(), json);

        let bare = ScalarDocument::new([], 0.0, None);
        let csv = bare.to_csv();
        assert_eq!(ScalarDocument::from_csv(&csv).unwrap().to_csv(), csv);
    }

    #[test]
    fn region_reconstruction_is_stable() {
        let doc = sample_region_doc();
        let region = doc.region().unwrap();
        let doc2 = RegionDocument::new(doc.meta.clone(), &region);
        assert_eq!(doc.hull, doc2.hull);
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(0.0), "0.00000000000e0");
        assert_eq!(fmt_sig(0.3390359525563188), "3.39035952556e-1");
        assert_eq!(fmt_sig(1.5), "1.50000000000e0");
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(RegionDocument::from_csv("# broken\n0,0\n").is_err());
        assert!(RegionDocument::from_csv("0.1;0.2\n").is_err());
        assert!(ScalarDocument::from_csv("# a: b\n").is_err());
        assert!(RegionDocument::from_json("{}").is_err());
    }
}
