use rug::Integer;
use serde::{Deserialize, Serialize};
use szpiro_core::elliptic::{GlobalInvariants, Kodaira, LocalReductionData};
use szpiro_core::{Check, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    /// Absent for skips and non-finite margins.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    pub notes: String,
}

impl From<&Verdict> for CheckEntry {
    fn from(v: &Verdict) -> Self {
        CheckEntry {
            name: v.name.clone(),
            status: if v.pass { Status::Pass } else { Status::Fail },
            margin: v.margin.is_finite().then_some(v.margin),
            notes: v.notes.clone(),
        }
    }
}

impl From<&Check> for CheckEntry {
    fn from(c: &Check) -> Self {
        match c {
            Check::Verdict(v) => v.into(),
            Check::Skipped { name, reason } => CheckEntry::skip(name, reason),
        }
    }
}

impl CheckEntry {
    pub fn skip(name: &str, reason: &str) -> Self {
        CheckEntry {
            name: name.to_string(),
            status: Status::Skip,
            margin: None,
            notes: reason.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalEntry {
    pub p: String,
    pub kodaira: String,
    pub f_p: u32,
    pub n_p: u32,
    pub m_p: u32,
    pub c_p: u32,
    pub potential_good: bool,
    pub model_valuation: u32,
}

/// `GlobalInvariants` with every integer as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsEntry {
    /// Signed minimal discriminant.
    pub delta_min: String,
    pub conductor: String,
    pub semistable: bool,
    pub locals: Vec<LocalEntry>,
    pub t0: Vec<String>,
    pub t1: Vec<String>,
    pub t2: Vec<String>,
}

fn strings(v: &[Integer]) -> Vec<String> {
    v.iter().map(Integer::to_string).collect()
}

fn ints(v: &[String]) -> Result<Vec<Integer>, String> {
    v.iter().map(|s| s.parse::<Integer>().map_err(|e| format!("`{s}`: {e}"))).collect()
}

impl From<&GlobalInvariants> for InvariantsEntry {
    fn from(g: &GlobalInvariants) -> Self {
        InvariantsEntry {
            delta_min: g.signed_delta_min().to_string(),
            conductor: g.conductor.to_string(),
            semistable: g.semistable,
            locals: g
                .locals
                .iter()
                .map(|l| LocalEntry {
                    p: l.p.to_string(),
                    kodaira: l.kodaira.to_string(),
                    f_p: l.f_p,
                    n_p: l.n_p,
                    m_p: l.m_p,
                    c_p: l.c_p,
                    potential_good: l.potential_good,
                    model_valuation: l.model_valuation,
                })
                .collect(),
            t0: strings(&g.t0),
            t1: strings(&g.t1),
            t2: strings(&g.t2),
        }
    }
}

impl InvariantsEntry {
    pub fn to_global(&self) -> Result<GlobalInvariants, String> {
        let signed: Integer = self.delta_min.parse().map_err(|e| format!("delta_min: {e}"))?;
        let mut locals = Vec::new();
        for l in &self.locals {
            locals.push(LocalReductionData {
                p: l.p.parse().map_err(|e| format!("p: {e}"))?,
                kodaira: l.kodaira.parse::<Kodaira>().map_err(|e| e.to_string())?,
                f_p: l.f_p,
                n_p: l.n_p,
                m_p: l.m_p,
                c_p: l.c_p,
                potential_good: l.potential_good,
                model_valuation: l.model_valuation,
            });
        }
        Ok(GlobalInvariants {
            sign: if signed < 0 { -1 } else { 1 },
            delta_min: signed.abs(),
            conductor: self.conductor.parse().map_err(|e| format!("conductor: {e}"))?,
            locals,
            semistable: self.semistable,
            t0: ints(&self.t0)?,
            t1: ints(&self.t1)?,
            t2: ints(&self.t2)?,
        })
    }
}

/// One curve's line in a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub a: [String; 5],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<InvariantsEntry>,
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Only with `--timing`, which gives up byte-identical reports.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl ReportEntry {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report entries serialise")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub errors: usize,
}

impl Summary {
    pub fn add(&mut self, checks: &[CheckEntry]) {
        for c in checks {
            match c.status {
                Status::Pass => self.pass += 1,
                Status::Fail => self.fail += 1,
                Status::Skip => self.skip += 1,
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.fail > 0)
    }
}
