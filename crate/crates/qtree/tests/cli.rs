//! End-to-end tests of the command-line surface: exit codes, output
//! wording, structured records, and error diagnostics.

use std::path::Path;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("qtree")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = qtree::cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_human_report_on_p4() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "0 1\n1 2\n2 3\n");
    let (code, out, _) = run(&["compute", &p4]);
    assert_eq!(code, 0);
    assert!(out.contains("Qut = S2+"));
    assert!(out.contains("|Aut| = 2"));
    assert!(out.ends_with("quantum symmetry: no\n"));
}

#[test]
fn compute_human_report_on_quantum_star() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", "h a\nh b\nh c\nh d\n");
    let (code, out, _) = run(&["compute", &star]);
    assert_eq!(code, 0);
    assert!(out.contains("Qut = S4+"));
    assert!(out.contains("center: {h}"));
    assert!(out.ends_with("quantum symmetry: yes\n"));
}

#[test]
fn compute_structured_record_is_pinned() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.txt", "0 1\n1 2\n2 3\n");
    let (code, out, _) = run(&["compute", "--format", "structured", &p4]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        concat!(
            r#"{"input":{"vertices":4,"edges":3},"center":[1,2],"radius":2,"#,
            r#""rootified":true,"expr":"S2+","expr_tree":{"kind":"snplus","n":2},"#,
            r#""aut_order":"2","quantum_symmetry":false,"orbits":[[0,3],[1,2]]}"#,
            "\n"
        )
    );
}

#[test]
fn compute_with_explicit_root() {
    let dir = tempfile::tempdir().unwrap();
    // Rooting P3 at an endpoint kills the symmetry.
    let p3 = write(dir.path(), "p3.txt", "0 1\n1 2\n");
    let (code, out, _) = run(&["compute", "--root", "0", &p3]);
    assert_eq!(code, 0);
    assert!(out.contains("Qut = 1"));
    let (code, out, _) = run(&["compute", "--root", "1", &p3]);
    assert_eq!(code, 0);
    assert!(out.contains("Qut = S2+"));
}

#[test]
fn compute_rejects_cycles_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let triangle = write(dir.path(), "triangle.txt", "0 1\n1 2\n2 0\n");
    let (code, out, err) = run(&["compute", &triangle]);
    assert_eq!(code, 1);
    assert_eq!(out, "", "no partial report on errors");
    assert_eq!(err, "error: input has a cycle\n");
}

#[test]
fn compute_reports_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "x x\n");
    let (code, _, err) = run(&["compute", &bad]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: line 1: self-loop"));
}

#[test]
fn center_command_lines() {
    let dir = tempfile::tempdir().unwrap();
    let p5 = write(dir.path(), "p5.txt", "0 1\n1 2\n2 3\n3 4\n");
    let (code, out, _) = run(&["center", &p5]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "radius: 2\ncenter: {2}\nlayer 0: {0, 4}\nlayer 1: {1, 3}\nsurvivors: {2}\n"
    );
    let (code, out, _) = run(&["center", "--format", "structured", &p5]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        r#"{"radius":2,"center":[2],"layers":[[0,4],[1,3]],"survivors":[2]}"#.to_owned() + "\n"
    );
}

#[test]
fn canon_prints_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.txt", "0 1\n1 2\n");
    let (code, out, _) = run(&["canon", &p3]);
    assert_eq!(code, 0);
    assert_eq!(out, "(()())\n");
    let (code, out, _) = run(&["canon", "--root", "0", &p3]);
    assert_eq!(code, 0);
    assert_eq!(out, "((()))\n");
    let (code, out, _) = run(&["canon", "--format", "structured", &p3]);
    assert_eq!(code, 0);
    assert_eq!(out, r#"{"code":"(()())","root":1,"subdivided":false}"#.to_owned() + "\n");
}

#[test]
fn orbits_prints_one_class_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", "h a\nh b\nh c\n");
    let (code, out, _) = run(&["orbits", &star]);
    assert_eq!(code, 0);
    assert_eq!(out, "{h}\n{a, b, c}\n");
    // Non-trees are fine here: refinement has no tree precondition.
    let triangle = write(dir.path(), "triangle.txt", "0 1\n1 2\n2 0\n");
    let (code, out, _) = run(&["orbits", "--format", "structured", &triangle]);
    assert_eq!(code, 0);
    assert_eq!(out, r#"{"orbits":[[0,1,2]]}"#.to_owned() + "\n");
}

#[test]
fn iso_answers_both_ways_with_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.txt", "0 1\n1 2\n2 3\n");
    let b = write(dir.path(), "b.txt", "d c\nb c\nb a\n");
    let star = write(dir.path(), "star.txt", "0 1\n0 2\n0 3\n");
    let (code, out, _) = run(&["iso", &a, &b]);
    assert_eq!((code, out.as_str()), (0, "isomorphic\n"));
    let (code, out, _) = run(&["iso", &a, &star]);
    assert_eq!((code, out.as_str()), (0, "not isomorphic\n"));
}

#[test]
fn gen_enumerates_trees() {
    let (code, out, _) = run(&["gen", "--n", "4"]);
    assert_eq!(code, 0);
    let blocks: Vec<&str> = out.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    // Every block parses back into a 4-vertex tree.
    for block in blocks {
        let g = qtree::parse_edge_list(block).unwrap();
        assert_eq!(g.vertex_count(), 4);
        g.validate_tree().unwrap();
    }
}

#[test]
fn gen_single_vertex_uses_header_form() {
    let (code, out, _) = run(&["gen", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n 1\n");
    let g = qtree::parse_edge_list(&out).unwrap();
    assert_eq!(g.vertex_count(), 1);
}

#[test]
fn gen_rooted_marks_roots() {
    let (code, out, _) = run(&["gen", "--n", "3", "--rooted"]);
    assert_eq!(code, 0);
    let blocks: Vec<&str> = out.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    for block in blocks {
        assert!(block.starts_with("# root 0"));
    }
}

#[test]
fn gen_random_is_seeded_and_reproducible() {
    let (_, out1, _) = run(&["gen", "--n", "12", "--random", "3", "--seed", "9"]);
    let (_, out2, _) = run(&["gen", "--n", "12", "--random", "3", "--seed", "9"]);
    assert_eq!(out1, out2);
    let (_, out3, _) = run(&["gen", "--n", "12", "--random", "3", "--seed", "10"]);
    assert_ne!(out1, out3);
    for block in out1.trim_end().split("\n\n") {
        qtree::parse_edge_list(block).unwrap().validate_tree().unwrap();
    }
}

#[test]
fn gen_rejects_out_of_range() {
    let (code, _, err) = run(&["gen", "--n", "19"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: n = 19 is outside"));
}

#[test]
fn census_writes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["census", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n\ttotal\tquantum\tclassical\ttrivial_aut\tdistinct_exprs\n\
         1\t1\t0\t1\t1\t1\n\
         2\t1\t0\t1\t0\t1\n\
         3\t1\t0\t1\t0\t1\n\
         4\t2\t0\t2\t0\t2\n\
         5\t3\t1\t2\t0\t2\n"
    );

    let summary = dir.path().join("summary.tsv");
    let details = dir.path().join("details.tsv");
    let (code, out, _) = run(&[
        "census",
        "--max-n",
        "4",
        "--out",
        summary.to_str().unwrap(),
        "--details",
        details.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "");
    let detail_text = std::fs::read_to_string(details).unwrap();
    assert_eq!(detail_text.lines().count(), 1 + 5); // header + 5 trees
    assert!(std::fs::read_to_string(summary).unwrap().ends_with("4\t2\t0\t2\t0\t2\n"));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = run(&["compute"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_0_for_every_subcommand() {
    for sub in ["compute", "center", "canon", "orbits", "iso", "gen", "census"] {
        let (code, out, _) = run(&[sub, "--help"]);
        assert_eq!(code, 0, "--help failed for {}", sub);
        assert!(!out.is_empty());
    }
    let (code, _, _) = run(&["--help"]);
    assert_eq!(code, 0);
    // The iso help names the quantum-isomorphism guarantee.
    let (_, out, _) = run(&["iso", "--help"]);
    assert!(out.contains("quantum isomorphism"));
}

#[test]
fn brute_force_cap_reads_environment() {
    // This test binary never calls the oracle elsewhere, so mutating the
    // process environment here cannot race another reader.
    std::env::set_var("QTREE_MAX_BRUTE", "4");
    assert_eq!(qtree::oracle::max_brute_default(), 4);
    let five = qtree::ColoredGraph::uniform(qtree::graph::path_graph(5));
    assert!(qtree::oracle::brute_automorphisms(&five).is_err());
    std::env::remove_var("QTREE_MAX_BRUTE");
    assert_eq!(qtree::oracle::max_brute_default(), 12);
    assert!(qtree::oracle::brute_automorphisms(&five).is_ok());
}
