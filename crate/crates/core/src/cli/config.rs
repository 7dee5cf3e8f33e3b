//! Run configuration: a TOML document describing the field, the system, the
//! singular points and the command options.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Rationals};
use crate::torelli::Domain;

use super::parse::{parse_poly_with_degree, parse_terms};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Hilbert,
    Slp,
    Socle,
    Genus,
    IdealSections,
    Torelli,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Hilbert => "hilbert",
            Command::Slp => "slp",
            Command::Socle => "socle",
            Command::Genus => "genus",
            Command::IdealSections => "ideal-sections",
            Command::Torelli => "torelli",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hilbert" => Command::Hilbert,
            "slp" => Command::Slp,
            "socle" => Command::Socle,
            "genus" => Command::Genus,
            "ideal-sections" => Command::IdealSections,
            "torelli" => Command::Torelli,
            other => return Err(Error::Config(format!("unknown command `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// A scalar written either as a TOML integer or as a string (`"3/4"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn as_text(&self) -> String {
        match self {
            ScalarText::Int(n) => n.to_string(),
            ScalarText::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub poly: String,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub coords: Vec<ScalarText>,
    #[serde(rename = "type")]
    pub sing_type: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    /// Differential operators, written as polynomials in `x_i` = `d/dx_i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conditions: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adjoint_conditions: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SectionFlavor {
    Equisingular,
    Adjoint,
    Points,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub up_to: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Domain>,
    /// Degree for `ideal-sections`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<SectionFlavor>,
    /// Explicit Lefschetz elements for `slp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<Vec<String>>,
    /// Properties the user attests but the tool does not certify.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assumptions: Option<Vec<String>>,
}

/// Raw document shape.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    command: Option<String>,
    #[serde(default)]
    field: Option<String>,
    ambient: usize,
    #[serde(default)]
    system: Vec<FormSpec>,
    #[serde(default)]
    singular_points: Vec<PointSpec>,
    #[serde(default)]
    points: Vec<Vec<ScalarText>>,
    #[serde(default)]
    options: Options,
    #[serde(default)]
    output: Option<String>,
    #[serde(default)]
    description: Option<String>,
}

/// A validated run configuration. Everything that influences results is
/// serialized into the input hash; the output format is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub field: FieldSpec,
    pub ambient: usize,
    pub system: Vec<FormSpec>,
    pub singular_points: Vec<PointSpec>,
    pub points: Vec<Vec<ScalarText>>,
    pub options: Options,
    #[serde(skip)]
    pub output: OutputFormat,
    #[serde(skip)]
    pub description: Option<String>,
}

impl RunConfig {
    pub fn n_vars(&self) -> usize {
        self.ambient + 1
    }

    pub fn seed(&self) -> u64 {
        self.options.seed.unwrap_or(0)
    }
}

/// Parses and validates a TOML configuration. `command` overrides the
/// document's own `command` key when given.
pub fn parse_config(text: &str, command: Option<Command>) -> Result<RunConfig> {
    let raw: RawConfig =
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))?;
    let command = match (command, raw.command.as_deref()) {
        (Some(c), _) => c,
        (None, Some(c)) => c.parse()?,
        (None, None) => return Err(Error::Config("no command given".into())),
    };
    let field = match raw.field.as_deref() {
        Some(f) => FieldSpec::parse(f).map_err(|e| Error::Config(e.to_string()))?,
        None => FieldSpec::Rationals,
    };
    if raw.ambient < 2 {
        return Err(Error::Config(format!(
            "ambient must be at least 2, got {}",
            raw.ambient
        )));
    }
    let n_vars = raw.ambient + 1;
    for (i, form) in raw.system.iter().enumerate() {
        parse_poly_with_degree(&Rationals, n_vars, &form.poly, form.degree).map_err(
            |e| match e {
                Error::Degree(msg) => Error::Degree(format!("system[{i}]: {msg}")),
                Error::Config(msg) => Error::Config(format!("system[{i}]: {msg}")),
                other => other,
            },
        )?;
    }
    let needs_system = !(command == Command::IdealSections && raw.singular_points.is_empty());
    if raw.system.is_empty() && needs_system {
        return Err(Error::Config(format!(
            "command `{}` needs a non-empty `system`",
            command.name()
        )));
    }
    for (i, p) in raw.singular_points.iter().enumerate() {
        if p.coords.len() != n_vars {
            return Err(Error::Config(format!(
                "singular_points[{i}]: expected {n_vars} coordinates, got {}",
                p.coords.len()
            )));
        }
        for op in p.conditions.iter().chain(&p.adjoint_conditions).flatten() {
            parse_terms(n_vars, op)
                .map_err(|e| Error::Config(format!("singular_points[{i}]: {e}")))?;
        }
    }
    for (i, p) in raw.points.iter().enumerate() {
        if p.len() != n_vars {
            return Err(Error::Config(format!(
                "points[{i}]: expected {n_vars} coordinates, got {}",
                p.len()
            )));
        }
    }
    if command == Command::IdealSections && raw.options.degree.is_none() {
        return Err(Error::Config("ideal-sections needs options.degree".into()));
    }
    let output = match raw.output.as_deref() {
        Some(o) => o.parse()?,
        None => OutputFormat::Json,
    };
    Ok(RunConfig {
        command,
        field,
        ambient: raw.ambient,
        system: raw.system,
        singular_points: raw.singular_points,
        points: raw.points,
        options: raw.options,
        output,
        description: raw.description,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FERMAT: &str = r#"
command = "hilbert"
field = "rationals"
ambient = 2

[[system]]
poly = "x0^4 + x1^4 + x2^4"
degree = 4
"#;

    #[test]
    fn minimal_config() {
        let c = parse_config(FERMAT, None).unwrap();
        assert_eq!(c.command, Command::Hilbert);
        assert_eq!(c.field, FieldSpec::Rationals);
        assert_eq!(c.n_vars(), 3);
        assert_eq!(c.system.len(), 1);
    }

    #[test]
    fn command_override() {
        let c = parse_config(FERMAT, Some(Command::Socle)).unwrap();
        assert_eq!(c.command, Command::Socle);
    }

    #[test]
    fn inhomogeneous_term_is_a_degree_error() {
        let text = FERMAT.replace("x0^4 + x1^4 + x2^4", "x0^4 + x0^2 x1");
        match parse_config(&text, None) {
            Err(Error::Degree(msg)) => assert!(msg.contains("x0^2 x1")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_command_and_keys() {
        let text = FERMAT.replace("\"hilbert\"", "\"frobnicate\"");
        assert!(matches!(parse_config(&text, None), Err(Error::Config(_))));
        let text = format!("{FERMAT}\nfrobnicate = 3\n");
        assert!(matches!(parse_config(&text, None), Err(Error::Config(_))));
        let text = format!("{FERMAT}\n[options]\nbogus = 1\n");
        assert!(matches!(parse_config(&text, None), Err(Error::Config(_))));
    }

    #[test]
    fn singular_point_arity_is_checked() {
        let text = format!("{FERMAT}\n[[singular_points]]\ncoords = [0, 1]\ntype = \"A1\"\n");
        assert!(matches!(parse_config(&text, None), Err(Error::Config(_))));
    }

    #[test]
    fn ideal_sections_without_system() {
        let text = r#"
command = "ideal-sections"
ambient = 2
points = [[0, 0, 1], [1, 1, 1]]
[options]
degree = 2
"#;
        let c = parse_config(text, None).unwrap();
        assert_eq!(c.points.len(), 2);
        assert!(parse_config(&text.replace("degree = 2", ""), None).is_err());
    }
}
