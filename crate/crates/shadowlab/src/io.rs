//! Polytope files, experiment configuration, and report/CSV emission.
//!
//! Everything here is built for reproducibility: reports embed the master
//! seed and crate version so a published table can be regenerated from one
//! line, JSON round-trips exactly, and CSV floats carry 17 significant
//! digits with '.' decimals and LF line endings regardless of locale.

use crate::bounds::{Body, BoundReport};
use crate::error::{Error, Result};
use crate::families;
use crate::polytope::{VPolytope, Zonotope};
use crate::rng::Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// On-disk polytope description. `vertices` is always present; a zonotope
/// additionally carries `generators` (and optionally `base`), which take
/// precedence when reconstructing the body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub label: String,
    pub n: usize,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<f64>>,
}

impl PolytopeFile {
    /// Snapshot a body. Zonotopes keep their generator description (the
    /// vertex list is still materialized so any reader can use the file);
    /// plain polytopes store their computed edge graph.
    pub fn from_body(label: &str, body: &Body) -> Result<Self> {
        match body {
            Body::Zonotope(z) => Ok(Self {
                label: label.to_string(),
                n: z.dim(),
                vertices: z.vertices()?,
                edges: None,
                generators: Some(z.generators().to_vec()),
                base: Some(z.base().to_vec()),
            }),
            Body::Polytope(p) => Ok(Self {
                label: label.to_string(),
                n: p.dim(),
                vertices: p.vertices().to_vec(),
                edges: Some(p.edges()?.to_vec()),
                generators: None,
                base: None,
            }),
        }
    }

    /// Reconstruct the body: generators win, then a stored edge graph,
    /// then hull-from-points.
    pub fn to_body(&self) -> Result<Body> {
        for v in &self.vertices {
            if v.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    got: v.len(),
                });
            }
        }
        if let Some(gens) = &self.generators {
            let base = self.base.clone().unwrap_or_else(|| vec![0.0; self.n]);
            return Ok(Body::Zonotope(Zonotope::new(gens.clone(), base)?));
        }
        if let Some(edges) = &self.edges {
            return Ok(Body::Polytope(VPolytope::with_edges(
                self.vertices.clone(),
                edges.clone(),
            )?));
        }
        Ok(Body::Polytope(VPolytope::from_points(&self.vertices)?))
    }
}

pub fn write_polytope(path: &Path, file: &PolytopeFile) -> Result<()> {
    let mut text = serde_json::to_string_pretty(file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn read_polytope(path: &Path) -> Result<PolytopeFile> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hypercube,
    Birkhoff,
    Permutahedron,
    AugmentedPermutahedron,
    ZnParallel,
    ZnBasis,
    File,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Hypercube,
        Family::Birkhoff,
        Family::Permutahedron,
        Family::AugmentedPermutahedron,
        Family::ZnParallel,
        Family::ZnBasis,
        Family::File,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Birkhoff => "birkhoff",
            Family::Permutahedron => "permutahedron",
            Family::AugmentedPermutahedron => "augmented_permutahedron",
            Family::ZnParallel => "zn_parallel",
            Family::ZnBasis => "zn_basis",
            Family::File => "file",
        }
    }

    /// The parameter that a sweep varies for this family.
    pub fn sweep_param(self) -> &'static str {
        match self {
            Family::ZnParallel => "k",
            _ => "n",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = Family::ALL.iter().map(|f| f.as_str()).collect();
                Error::InvalidParameter(format!(
                    "unknown family '{s}'; valid families: {}",
                    valid.join(", ")
                ))
            })
    }
}

/// One experiment, fully determined: family + params + trials + seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub family: Family,
    /// Stringly-typed so one map covers sizes, tolerances, and paths;
    /// BTreeMap keeps serialization order deterministic.
    pub params: BTreeMap<String, String>,
    pub trials: u64,
    pub seed: u64,
    pub checks: Vec<String>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidParameter("trials must be >= 1".into()));
        }
        match self.family {
            Family::File => {
                self.param_str("path")?;
            }
            Family::ZnParallel => {
                self.param_usize("k")?;
            }
            _ => {
                self.param_usize("n")?;
            }
        }
        Ok(())
    }

    pub fn param_str(&self, key: &str) -> Result<&str> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidParameter(format!("missing parameter '{key}'")))
    }

    pub fn param_usize(&self, key: &str) -> Result<usize> {
        self.param_str(key)?
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("parameter '{key}' must be an integer")))
    }

    pub fn param_f64_or(&self, key: &str, default: f64) -> Result<f64> {
        match self.params.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("parameter '{key}' must be a number"))),
        }
    }

    /// Build the body this config describes. Randomized families draw
    /// their perturbations from the config seed, so the instance is a
    /// reproducible artifact.
    pub fn instantiate(&self) -> Result<Body> {
        self.validate()?;
        let mut rng = Rng::new(self.seed);
        match self.family {
            Family::Hypercube => Ok(Body::Zonotope(families::hypercube(self.param_usize("n")?)?)),
            Family::Birkhoff => Ok(Body::Polytope(families::birkhoff(self.param_usize("n")?)?)),
            Family::Permutahedron => Ok(Body::Zonotope(families::permutahedron(
                self.param_usize("n")?,
            )?)),
            Family::AugmentedPermutahedron => Ok(Body::Zonotope(
                families::augmented_permutahedron(self.param_usize("n")?)?,
            )),
            Family::ZnParallel => Ok(Body::Zonotope(families::zn_parallel(
                self.param_usize("k")?,
                self.param_f64_or("eps", 0.05)?,
                &mut rng,
            )?)),
            Family::ZnBasis => Ok(Body::Zonotope(families::zn_basis(
                self.param_usize("n")?,
                self.param_f64_or("eps", 0.0)?,
                &mut rng,
            )?)),
            Family::File => Ok(read_polytope(Path::new(self.param_str("path")?))?.to_body()?),
        }
    }

    /// Deterministic label: family name plus sorted params.
    pub fn label(&self) -> String {
        let mut s = self.family.as_str().to_string();
        for (k, v) in &self.params {
            let _ = write!(s, "_{k}{v}");
        }
        s
    }
}

/// One named check's outcome inside a report. Inequality checks carry the
/// full sandwich with slack ratios; statistical checks carry p-values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_values: Option<BTreeMap<String, f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub artifact_version: String,
    pub checks: Vec<CheckRow>,
    pub elapsed_seconds: f64,
    pub degenerate_trials: u64,
}

impl ExperimentReport {
    /// Assemble a report, enforcing exactly one row per requested check,
    /// in request order.
    pub fn new(
        config: ExperimentConfig,
        checks: Vec<CheckRow>,
        elapsed_seconds: f64,
        degenerate_trials: u64,
    ) -> Result<Self> {
        if config.checks.len() != checks.len()
            || config
                .checks
                .iter()
                .zip(&checks)
                .any(|(want, row)| *want != row.name)
        {
            return Err(Error::Internal(format!(
                "report rows {:?} do not match requested checks {:?}",
                checks.iter().map(|r| &r.name).collect::<Vec<_>>(),
                config.checks
            )));
        }
        Ok(Self {
            config,
            artifact_version: ARTIFACT_VERSION.to_string(),
            checks,
            elapsed_seconds,
            degenerate_trials,
        })
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// 17 significant digits: enough that parsing the text recovers the exact
/// f64, with '.' decimals independent of locale.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Per-trial CSV for a shadow run: `trial_index,vertex_count,degenerate`.
pub fn trial_csv(rows: &[(u64, usize, bool)]) -> String {
    let mut out = String::from("trial_index,vertex_count,degenerate\n");
    for &(t, count, degenerate) in rows {
        let _ = writeln!(out, "{t},{count},{}", u8::from(degenerate));
    }
    out
}

/// One sweep point: the family parameter plus the measured sandwich.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param: u64,
    pub measured_mean: f64,
    pub measured_se: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub slack_lower: f64,
    pub slack_upper: f64,
    pub gdiam: f64,
    pub m: f64,
    pub big_m: f64,
    pub delta: Option<f64>,
}

/// Sweep CSV; the δ column appears only when every row carries one.
pub fn sweep_csv(param_name: &str, rows: &[SweepRow]) -> String {
    let with_delta = !rows.is_empty() && rows.iter().all(|r| r.delta.is_some());
    let mut out = format!(
        "{param_name},measured_mean,measured_se,lower_bound,upper_bound,slack_lower,slack_upper,gdiam,m,M{}\n",
        if with_delta { ",delta" } else { "" }
    );
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.param,
            format_float(r.measured_mean),
            format_float(r.measured_se),
            format_float(r.lower_bound),
            format_float(r.upper_bound),
            format_float(r.slack_lower),
            format_float(r.slack_upper),
            format_float(r.gdiam),
            format_float(r.m),
            format_float(r.big_m),
        );
        if with_delta {
            let _ = write!(out, ",{}", format_float(r.delta.unwrap()));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(family: Family, params: &[(&str, &str)]) -> ExperimentConfig {
        ExperimentConfig {
            family,
            params: params
                .iter()
                .map(|&(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            trials: 100,
            seed: 7,
            checks: vec![],
        }
    }

    #[test]
    fn zonotope_file_round_trips_through_disk() {
        let cube = families::hypercube(3).unwrap();
        let body = Body::Zonotope(cube);
        let file = PolytopeFile::from_body("cube3", &body).unwrap();
        assert_eq!(file.n, 3);
        assert_eq!(file.vertices.len(), 8);
        assert_eq!(file.generators.as_ref().unwrap().len(), 3);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cube3.json");
        write_polytope(&path, &file).unwrap();
        let back = read_polytope(&path).unwrap();
        assert_eq!(back, file);
        match back.to_body().unwrap() {
            Body::Zonotope(z) => assert_eq!(z.generators().len(), 3),
            Body::Polytope(_) => panic!("generators should reconstruct a zonotope"),
        }
    }

    #[test]
    fn stored_edges_are_used_verbatim() {
        let square = PolytopeFile {
            label: "square".into(),
            n: 2,
            vertices: vec![
                vec![0.0, 0.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0],
                vec![0.0, 1.0],
            ],
            edges: Some(vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
            generators: None,
            base: None,
        };
        match square.to_body().unwrap() {
            Body::Polytope(p) => {
                // stored edges, in the (min, max)-sorted order edges() uses
                assert_eq!(p.edges().unwrap(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
            }
            Body::Zonotope(_) => panic!("no generators here"),
        }

        // without edges the hull is recomputed from the points
        let bare = PolytopeFile { edges: None, ..square };
        match bare.to_body().unwrap() {
            Body::Polytope(p) => assert_eq!(p.num_vertices(), 4),
            Body::Zonotope(_) => panic!(),
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let bad = PolytopeFile {
            label: "bad".into(),
            n: 3,
            vertices: vec![vec![0.0, 0.0]],
            edges: None,
            generators: None,
            base: None,
        };
        assert!(matches!(
            bad.to_body(),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn malformed_json_reports_line_and_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("broken.json");
        std::fs::write(&path, "{\n  \"label\": \"x\",\n  oops\n}\n").unwrap();
        match read_polytope(&path) {
            Err(Error::Json { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column >= 1);
            }
            other => panic!("expected a json error, got {other:?}"),
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("bogus".parse::<Family>().is_err());
        assert_eq!(Family::ZnParallel.sweep_param(), "k");
        assert_eq!(Family::Hypercube.sweep_param(), "n");
    }

    #[test]
    fn config_validation_and_labels() {
        let c = config(Family::Hypercube, &[("n", "4")]);
        c.validate().unwrap();
        assert_eq!(c.label(), "hypercube_n4");

        let mut zero = c.clone();
        zero.trials = 0;
        assert!(zero.validate().is_err());

        let missing = config(Family::ZnParallel, &[("n", "4")]);
        assert!(missing.validate().is_err());

        let not_int = config(Family::Hypercube, &[("n", "four")]);
        assert!(not_int.validate().is_err());
    }

    #[test]
    fn instantiate_is_deterministic_per_seed() {
        let c = config(Family::ZnBasis, &[("n", "3"), ("eps", "0.05")]);
        let a = c.instantiate().unwrap();
        let b = c.instantiate().unwrap();
        match (a, b) {
            (Body::Zonotope(a), Body::Zonotope(b)) => {
                assert_eq!(a.generators(), b.generators());
                assert_eq!(a.generators().len(), 6);
            }
            _ => panic!("zn_basis builds a zonotope"),
        }

        let mut other_seed = c.clone();
        other_seed.seed = 8;
        match other_seed.instantiate().unwrap() {
            Body::Zonotope(z) => assert_ne!(z.generators(), {
                let Body::Zonotope(z7) = c.instantiate().unwrap() else {
                    panic!()
                };
                z7.generators().to_vec()
            }),
            _ => panic!(),
        }
    }

    #[test]
    fn instantiate_reads_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        let body = Body::Polytope(families::birkhoff(3).unwrap());
        write_polytope(&path, &PolytopeFile::from_body("b3", &body).unwrap()).unwrap();

        let c = config(Family::File, &[("path", path.to_str().unwrap())]);
        match c.instantiate().unwrap() {
            Body::Polytope(p) => assert_eq!(p.num_vertices(), 6),
            Body::Zonotope(_) => panic!(),
        }
    }

    #[test]
    fn report_round_trips_and_enforces_row_match() {
        let mut c = config(Family::Hypercube, &[("n", "4")]);
        c.checks = vec!["theorem_1_1".into(), "delta".into()];
        let rows = vec![
            CheckRow {
                name: "theorem_1_1".into(),
                passed: true,
                detail: "sandwich holds".into(),
                bound: Some(BoundReport {
                    name: "shadow-sandwich".into(),
                    lower: 7.5,
                    estimate: 8.01,
                    std_error: 0.02,
                    upper: 9.9,
                    satisfied: true,
                    slack_lower: 1.068,
                    slack_upper: 1.236,
                }),
                p_values: None,
            },
            CheckRow {
                name: "delta".into(),
                passed: true,
                detail: "delta = 1".into(),
                bound: None,
                p_values: Some([("ks".to_string(), 0.4)].into_iter().collect()),
            },
        ];
        let report = ExperimentReport::new(c.clone(), rows.clone(), 1.25, 0).unwrap();
        assert!(report.all_passed());
        let back = ExperimentReport::from_json(&report.to_json().unwrap()).unwrap();
        assert_eq!(back, report);

        // wrong order and wrong count are both rejected
        let swapped = vec![rows[1].clone(), rows[0].clone()];
        assert!(ExperimentReport::new(c.clone(), swapped, 1.0, 0).is_err());
        assert!(ExperimentReport::new(c, vec![rows[0].clone()], 1.0, 0).is_err());
    }

    #[test]
    fn floats_render_with_seventeen_significant_digits() {
        assert_eq!(format_float(1.0), "1.0000000000000000e0");
        assert_eq!(format_float(0.1), "1.0000000000000001e-1");
        for &x in &[std::f64::consts::PI, 2.0 / 3.0, 123456.789, 1e-300] {
            let parsed: f64 = format_float(x).parse().unwrap();
            assert_eq!(parsed.to_bits(), x.to_bits());
        }
    }

    #[test]
    fn trial_csv_layout() {
        let csv = trial_csv(&[(0, 8, false), (1, 6, true)]);
        assert_eq!(csv, "trial_index,vertex_count,degenerate\n0,8,0\n1,6,1\n");
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn sweep_csv_includes_delta_only_when_complete() {
        let row = SweepRow {
            param: 4,
            measured_mean: 8.0,
            measured_se: 0.05,
            lower_bound: 7.0,
            upper_bound: 10.0,
            slack_lower: 8.0 / 7.0,
            slack_upper: 1.25,
            gdiam: 2.0,
            m: 1.0,
            big_m: 1.0,
            delta: Some(1.0),
        };
        let with = sweep_csv("n", &[row.clone()]);
        let header = with.lines().next().unwrap();
        assert_eq!(
            header,
            "n,measured_mean,measured_se,lower_bound,upper_bound,slack_lower,slack_upper,gdiam,m,M,delta"
        );
        assert_eq!(with.lines().count(), 2);
        assert!(with.lines().nth(1).unwrap().starts_with("4,8.0000000000000000e0,"));

        let without = sweep_csv("k", &[SweepRow { delta: None, ..row }]);
        assert!(without.lines().next().unwrap().ends_with(",M"));
        assert!(!without.contains('\r'));
    }
}
