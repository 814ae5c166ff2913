use fuzzy_depth::{depth_table, DepthConfig};
use fuzzy_depth_cli::{dataset_frv, emit_svg, parse_dataset, write_dataset, DatasetRecord};
use proptest::prelude::*;
use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fuzzy-depth"))
}

fn record() -> impl Strategy<Value = DatasetRecord> {
    (
        "[A-Za-z][A-Za-z0-9_ ]{0,8}",
        prop::array::uniform4(-1e6..1e6f64),
        0u64..1000,
    )
        .prop_map(|(id, mut k, frequency)| {
            k.sort_by(f64::total_cmp);
            DatasetRecord {
                id: id.trim().to_string(),
                a: k[0],
                b: k[1],
                c: k[2],
                d: k[3],
                frequency,
            }
        })
}

proptest! {
    #[test]
    fn write_then_parse_is_identity(records in prop::collection::vec(record(), 1..20)) {
        let text = write_dataset(&records);
        prop_assert_eq!(parse_dataset(&text).unwrap(), records);
    }
}

fn trees() -> Vec<DatasetRecord> {
    parse_dataset(&std::fs::read_to_string(data("trees_symmetric.csv")).unwrap()).unwrap()
}

#[test]
fn svg_is_well_formed() {
    let recs = trees();
    let x = dataset_frv(&recs).unwrap();
    let report = depth_table(&x, None, &DepthConfig::projection()).unwrap();
    let svg = emit_svg(&recs, &report);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let lines: Vec<_> = doc
        .descendants()
        .filter(|n| n.has_tag_name("polyline"))
        .collect();
    assert_eq!(lines.len(), recs.len());
    let stroke_of = |id: &str| {
        lines
            .iter()
            .find(|n| {
                n.descendants()
                    .any(|t| t.text().is_some_and(|s| s.starts_with(&format!("{id} "))))
            })
            .unwrap()
            .attribute("stroke")
            .unwrap()
            .to_string()
    };
    assert_eq!(stroke_of("T5"), "rgb(255,0,0)");
    assert_eq!(stroke_of("T4"), stroke_of("T6"));
    // the outermost pair ties at rank 8.5 of 9
    assert_eq!(stroke_of("T1"), stroke_of("T9"));
    assert_eq!(stroke_of("T1"), "rgb(16,0,239)");
}

#[test]
fn single_record_svg_is_red() {
    let recs = parse_dataset("id,a,b,c,d,frequency\nonly,0,1,2,3,4\n").unwrap();
    let x = dataset_frv(&recs).unwrap();
    let report = depth_table(&x, None, &DepthConfig::natural(2.0).unwrap()).unwrap();
    let svg = emit_svg(&recs, &report);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let line = doc
        .descendants()
        .find(|n| n.has_tag_name("polyline"))
        .unwrap();
    assert_eq!(line.attribute("stroke"), Some("rgb(255,0,0)"));
}

#[test]
fn depth_command_flags_the_deepest_row() {
    let out = bin()
        .args(["depth", "--method", "projection", "--input"])
        .arg(data("trees_symmetric.csv"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let flagged: Vec<&str> = text.lines().filter(|l| l.ends_with('*')).collect();
    assert_eq!(flagged.len(), 1);
    assert!(
        flagged[0].starts_with("T5") && flagged[0].contains("1.0000"),
        "{text}"
    );
}

#[test]
fn split_pair_query_depth() {
    let out = bin()
        .args([
            "depth", "--method", "natural", "--r", "1", "--format", "csv", "--input",
        ])
        .arg(data("split_pair.csv"))
        .arg("--queries")
        .arg(data("split_pair_query.csv"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "id,depth,rank\nA,0.307692,1\n"
    );
}

#[test]
fn reports_are_byte_identical() {
    for format in ["csv", "json", "table"] {
        let run = || {
            bin()
                .args([
                    "depth",
                    "--method",
                    "location-raised",
                    "--r",
                    "2",
                    "--theta",
                    "1",
                ])
                .args(["--format", format, "--input"])
                .arg(data("trees_symmetric.csv"))
                .output()
                .unwrap()
                .stdout
        };
        assert_eq!(run(), run());
    }
}

#[test]
fn exit_codes() {
    let usage = bin()
        .args(["depth", "--method", "sideways"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let missing_theta = bin()
        .args(["depth", "--method", "location", "--input"])
        .arg(data("trees_symmetric.csv"))
        .output()
        .unwrap();
    assert_eq!(missing_theta.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "id,a,b,c,d,frequency\nT1,3,2,1,0,5\n").unwrap();
    let data_err = bin()
        .args(["depth", "--method", "projection", "--input"])
        .arg(&bad)
        .output()
        .unwrap();
    assert_eq!(data_err.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&data_err.stderr).contains("line 2"));
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("trees.svg");
    let out = bin()
        .args(["plot", "--method", "natural", "--r", "1", "--input"])
        .arg(data("trees_symmetric.csv"))
        .arg("--output")
        .arg(&svg)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(roxmltree::Document::parse(&text).is_ok());
}

#[test]
fn verify_suite_passes() {
    let out = bin()
        .args(["verify", "--suite", "all", "--seed", "7"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.contains("0 unexpected"));
    assert!(text.contains("expected fails, got fail"));
}
