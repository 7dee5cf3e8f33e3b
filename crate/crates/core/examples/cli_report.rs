//! Driving a command from a TOML document, as the `ivhs` binary does, and
//! rendering the report as JSON and as a text table.

use ivhs::cli::{emit, parse_config, run, OutputFormat};

const CONFIG: &str = r#"
command = "ideal-sections"
field = "prime:65537"
ambient = 2
points = [[0, 1, 1], [1, 3, 1], [2, 5, 1], [3, 7, 1]]

[options]
degree = 2
"#;

pub fn run_example() -> String {
    let config = parse_config(CONFIG, None).unwrap();
    let report = run(&config);
    assert_eq!(report.exit_code(), 0);
    let json = emit(&report, OutputFormat::Json);
    let text = emit(&report, OutputFormat::Text);
    assert!(json.contains("\"h1_defect\": 1"));
    format!("{text}\n{} bytes of JSON", json.len())
}

fn main() {
    println!("{}", run_example());
}
