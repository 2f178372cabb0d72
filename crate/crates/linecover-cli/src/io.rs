//! JSON wire formats. Rationals travel as strings ("7", "-2.5", "3/4") so
//! that files diff exactly across runs; plain JSON integers are accepted on
//! input for convenience.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use linecover_core::model::{Instance, SolutionReport};
use linecover_core::one_sided::DValue;
use linecover_core::rational::Rat;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberLike {
    Text(String),
    Int(i64),
}

impl NumberLike {
    fn parse(&self) -> Result<Rat> {
        match self {
            NumberLike::Text(s) => s
                .parse::<Rat>()
                .with_context(|| format!("invalid rational literal {s:?}")),
            NumberLike::Int(v) => Ok(Rat::int(*v)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceJson {
    pub z: NumberLike,
    pub beta: NumberLike,
    pub x: Vec<NumberLike>,
}

impl InstanceJson {
    pub fn to_instance(&self) -> Result<Instance> {
        let z = self.z.parse()?;
        let beta = self.beta.parse()?;
        let x: Result<Vec<Rat>> = self.x.iter().map(|v| v.parse()).collect();
        Instance::new(z, beta, x?).map_err(|e| anyhow::anyhow!("invalid instance: {e}"))
    }

    pub fn from_instance(inst: &Instance) -> Self {
        InstanceJson {
            z: NumberLike::Text(inst.z().to_string()),
            beta: NumberLike::Text(inst.beta().to_string()),
            x: inst
                .x()
                .iter()
                .map(|v| NumberLike::Text(v.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub shift_processes: usize,
    pub pdr_processes: usize,
    pub set_valid_ops: usize,
    pub reverse_ops: usize,
    pub branch: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionJson {
    pub cost: String,
    pub y: Vec<String>,
    pub case: String,
    pub diagnostics: DiagnosticsJson,
}

impl SolutionJson {
    pub fn from_report(report: &SolutionReport) -> Self {
        SolutionJson {
            cost: report.cost.to_string(),
            y: report.y.iter().map(|v| v.to_string()).collect(),
            case: report.case.as_str().to_string(),
            diagnostics: DiagnosticsJson {
                shift_processes: report.diagnostics.shift_processes,
                pdr_processes: report.diagnostics.pdr_processes,
                set_valid_ops: report.diagnostics.set_valid_ops,
                reverse_ops: report.diagnostics.reverse_ops,
                branch: report
                    .diagnostics
                    .branch
                    .map(|b| b.as_str())
                    .unwrap_or("unknown")
                    .to_string(),
            },
        }
    }

    pub fn parse_positions(&self) -> Result<Vec<Rat>> {
        self.y
            .iter()
            .map(|s| {
                s.parse::<Rat>()
                    .with_context(|| format!("invalid rational literal {s:?}"))
            })
            .collect()
    }

    pub fn parse_cost(&self) -> Result<Rat> {
        self.cost
            .parse::<Rat>()
            .with_context(|| format!("invalid rational literal {:?}", self.cost))
    }
}

pub fn read_instance(path: &std::path::Path) -> Result<Instance> {
    let data = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let json: InstanceJson =
        serde_json::from_str(&data).with_context(|| format!("cannot parse {}", path.display()))?;
    json.to_instance()
}

pub fn write_instance(path: &std::path::Path, inst: &Instance) -> Result<()> {
    let json = InstanceJson::from_instance(inst);
    std::fs::write(path, serde_json::to_string_pretty(&json)?)
        .with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

/// `j,D(j)` rows; infinite entries print as `inf`.
pub fn d_series_csv(m: usize, series: &[DValue]) -> String {
    let mut out = String::from("j,d\n");
    for (offset, v) in series.iter().enumerate() {
        let rendered = match v {
            DValue::Infinite => "inf".to_string(),
            DValue::Finite(r) => r.to_string(),
        };
        out.push_str(&format!("{},{}\n", m + offset, rendered));
    }
    out
}

/// Independent re-check of a solution file against its instance.
pub fn verify_solution(inst: &Instance, solution: &SolutionJson) -> Result<()> {
    let y = solution.parse_positions()?;
    if y.len() != inst.n() {
        bail!("solution has {} positions, instance has {}", y.len(), inst.n());
    }
    if !linecover_core::model::verify_coverage(&y, inst.z(), inst.beta()) {
        bail!("solution does not cover the barrier");
    }
    let cost = solution.parse_cost()?;
    let actual = linecover_core::model::total_cost(inst.x(), &y);
    if cost != actual {
        bail!("declared cost {cost} does not match movement sum {actual}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_round_trip_is_exact() {
        let raw = r#"{"z": "1", "beta": "10", "x": ["1", "2.5", "3/4", "8", "9"]}"#;
        let json: InstanceJson = serde_json::from_str(raw).unwrap();
        let inst = json.to_instance().unwrap_err(); // 3/4 < 2.5: unsorted
        let _ = inst;

        let raw = r#"{"z": "1", "beta": "10", "x": ["-0.5", "2.5", 7, "35/4"]}"#;
        let json: InstanceJson = serde_json::from_str(raw).unwrap();
        let inst = json.to_instance().unwrap();
        let back = InstanceJson::from_instance(&inst);
        let again = back.to_instance().unwrap();
        assert_eq!(inst, again);
        assert_eq!(inst.x()[0], Rat::new(-1, 2));
        assert_eq!(inst.x()[3], Rat::new(35, 4));
    }

    #[test]
    fn malformed_inputs_rejected() {
        for raw in [
            r#"{"z": "0", "beta": "10", "x": ["1"]}"#,
            r#"{"z": "1", "beta": "10", "x": []}"#,
            r#"{"z": "1", "beta": "10", "x": ["abc"]}"#,
        ] {
            let json: InstanceJson = serde_json::from_str(raw).unwrap();
            assert!(json.to_instance().is_err(), "{raw}");
        }
    }

    #[test]
    fn verify_solution_checks() {
        let inst = Instance::new(
            Rat::int(1),
            Rat::int(10),
            ["1", "2", "3", "8", "9"]
                .iter()
                .map(|s| s.parse().unwrap())
                .collect(),
        )
        .unwrap();
        let report = linecover_core::solve(&inst).unwrap();
        let solution = SolutionJson::from_report(&report);
        verify_solution(&inst, &solution).unwrap();

        let mut broken = solution.clone();
        broken.cost = "999".into();
        assert!(verify_solution(&inst, &broken).is_err());
        let mut uncovering = solution;
        uncovering.y[0] = "-100".into();
        assert!(verify_solution(&inst, &uncovering).is_err());
    }
}
