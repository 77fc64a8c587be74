use std::process::Command;

use affstan::enumerate::involutions;
use affstan::notation::{parse_expansion, parse_involution, parse_permutation};
use affstan::symfunc::{AffineSchur, Monomial};
use affstan::tau::{tau, toggle};
use affstan_cli::{run, Outcome};
use proptest::prelude::*;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("affstan").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cli(&all);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    let out = cli(&["inv-stanley", "-n", "4", "t(3,8)", "--basis", "F"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "F[1,1,1,1] + F[2,1,1] + F[3,1]\n"));

    let out = cli(&["verify", "covering"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().last(), Some("12/12 cases verified"));

    let v = json(&["transition", "-n", "4", "[1,0,2,7]", "-r", "3"]);
    assert_eq!(v["equal"], Value::Bool(true));
    assert_eq!(v["left"].as_array().unwrap().len(), 2);
    assert_eq!(v["right"].as_array().unwrap().len(), 3);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_affstan");
    let ok = Command::new(bin).args(["verify", "toggling"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("8/8 cases verified"));

    let bad = Command::new(bin).args(["stanley", "[1,2,zz]"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8_lossy(&bad.stderr);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("zz"), "{err}");
}

#[test]
fn usage_errors_name_the_token() {
    for (args, token) in [
        (vec!["stanely", "[1,2]"], "stanely"),
        (vec!["stanley", "[1,2]", "--basis", "Q"], "Q"),
        (vec!["stanley", "[1,1]"], "1"),
        (vec!["inv-stanley", "t(3,8)"], "t(3,8)"),
        (vec!["tau", "-n", "4", "t(3,8)", "x", "2"], "x"),
    ] {
        let out = cli(&args);
        assert_eq!(out.code, 2, "{args:?}");
        assert_eq!(out.stderr.lines().count(), 1, "{args:?}: {}", out.stderr);
        assert!(out.stderr.contains(token), "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn scale_guard() {
    let word = "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3";
    let out = cli(&["stanley", "-n", "3", word]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("bound 14"), "{}", out.stderr);
    let out = cli(&["stanley", "-n", "3", "--max-length", "20", "s1 s2 s3 s1"]);
    assert_eq!(out.code, 0);
    let out = cli(&["verify", "conjecture-omega", "--max-hat", "15"]);
    assert_eq!(out.code, 2);
}

#[test]
fn selftest_and_corrupted_golden_files() {
    let out = cli(&["selftest", "small"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("selftest passed\n"));

    let dir = std::env::temp_dir().join(format!("affstan-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let builtin = include_str!("../data/golden.json");
    let altered = builtin.replace("\"expect\": \"[2,3,5,0]\"", "\"expect\": \"[2,3,5,1]\"");
    assert_ne!(altered, builtin);
    let path = dir.join("altered.json");
    std::fs::write(&path, altered).unwrap();
    let out = cli(&["selftest", "small", "--golden", path.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAILED alpha-min t(3,8)"), "{}", out.stdout);

    let broken = dir.join("broken.json");
    std::fs::write(&broken, &builtin[..builtin.len() / 2]).unwrap();
    let out = cli(&["selftest", "--golden", broken.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("broken.json"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("affstan-out-{}.txt", std::process::id()));
    let out = cli(&["stanley", "[0,3,6,1]", "--out", path.to_str().unwrap()]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "2m[1,1,1,1] + m[2,1,1]\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn json_is_canonical() {
    for args in [
        vec!["transition", "-n", "4", "[1,0,2,7]", "-r", "3", "--basis", "F"],
        vec!["inv-transition", "-n", "5", "t(2,8) t(4,10)", "-p", "2"],
        vec!["verify", "toggling"],
        vec!["tau", "-n", "8", "t(1,10)", "1", "18"],
    ] {
        let a = cli(&[args.clone(), vec!["--json"]].concat());
        let b = cli(&[args.clone(), vec!["--json"]].concat());
        assert_eq!(a, b);
        // serde_json maps sort their keys, so reserializing is the identity
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(format!("{v}\n"), a.stdout);
    }
}

#[test]
fn involution_json_round_trips() {
    let v = json(&["tau", "-n", "8", "t(1,4) t(5,7)", "4", "5"]);
    let z = parse_involution(&v["result"].to_string(), None).unwrap();
    assert_eq!(z, parse_involution("t(1,5) t(4,7)", Some(8)).unwrap());

    let v = json(&["phi", "-n", "4", "t(3,8)", "2"]);
    for side in ["minus", "plus"] {
        for z in v[side].as_array().unwrap() {
            let z = parse_involution(&z.to_string(), None).unwrap();
            let text = cli(&["alpha-min", &z.to_string(), "-n", "4"]);
            assert_eq!(text.code, 0);
        }
    }

    let v = json(&["schur-expand", "-n", "4", "4m[1,1,1,1] + 2m[2,1,1] + m[2,2] + m[3,1]"]);
    let f = parse_expansion::<AffineSchur>(&v.to_string()).unwrap();
    assert_eq!(f.to_string(), "F[1,1,1,1] + F[2,1,1] + F[3,1]");
    let back = cli(&["schur-expand", "-n", "4", &f.to_string()]);
    assert_eq!(back.stdout, "4m[1,1,1,1] + 2m[2,1,1] + m[2,2] + m[3,1]\n");
}

#[test]
fn toggle_matches_the_library() {
    let mut seen = 0;
    for y in involutions(3, 3) {
        for pi in y.atoms() {
            for i in 1..=3i64 {
                for j in i + 1..i + 9 {
                    if (j - i) % 3 == 0 || !pi.bruhat_cover(i, j).unwrap() || tau(&y, i, j).unwrap() != y {
                        continue;
                    }
                    let expected = serde_json::to_value(toggle(&pi, i, j, &y).unwrap()).unwrap();
                    let (ys, ps, is, js) = (y.to_string(), pi.to_string(), i.to_string(), j.to_string());
                    assert_eq!(json(&["toggle", "-n", "3", &ys, &ps, &is, &js]), expected);
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 0);
}

fn window(n: usize) -> impl Strategy<Value = Vec<i64>> {
    (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(-1i64..=1, n)).prop_map(
        move |(perm, shifts)| {
            let mut shifts = shifts;
            let total: i64 = shifts.iter().sum();
            shifts[0] -= total;
            perm.iter().zip(&shifts).map(|(p, s)| p + s * n as i64).collect()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn permutation_outputs_round_trip(w in (2usize..=4).prop_flat_map(window)) {
        let text = format!("[{}]", w.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
        let p = parse_permutation(&text, None).unwrap();
        prop_assume!(p.length() <= 8);

        let f = json(&["stanley", &text]);
        let parsed = parse_expansion::<Monomial>(&f.to_string()).unwrap();
        prop_assert_eq!(parsed, affstan::stanley::stanley(&p));
        let shown = cli(&["stanley", &text]).stdout;
        prop_assert_eq!(parse_expansion::<Monomial>(&shown).unwrap().to_json(), f);

        let code = json(&["code", &text]);
        prop_assert_eq!(code["code"].clone(), serde_json::to_value(p.code().entries()).unwrap());
    }

    #[test]
    fn atom_lists_round_trip(pick in 0usize..1000) {
        let zs = involutions(4, 4);
        let z = &zs[pick % zs.len()];
        let shown = z.to_string();
        let atoms = json(&["atoms", "-n", "4", &shown]);
        let parsed: Vec<_> = atoms
            .as_array()
            .unwrap()
            .iter()
            .map(|a| parse_permutation(&a.to_string(), Some(4)).unwrap())
            .collect();
        prop_assert_eq!(&parsed, &z.atoms());
        let text = cli(&["atoms", "-n", "4", &shown]).stdout;
        let from_text: Vec<_> = text.lines().map(|l| parse_permutation(l, None).unwrap()).collect();
        prop_assert_eq!(&from_text, &parsed);
        let amin = json(&["alpha-min", "-n", "4", &shown]);
        prop_assert_eq!(parse_permutation(&amin.to_string(), None).unwrap(), z.alpha_min());
    }
}
