use pucci::cli::run;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("pucci").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn translate_fixture() {
    let (code, out) = call(&["translate", "--in", "dante_it"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("À mes yeux apparut la glorieuse femme de ma pensée"), "{out}");
}

#[test]
fn translate_trace_shows_stages() {
    let dir = std::env::temp_dir().join(format!("pucci-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("in.txt");
    std::fs::write(&file, "Il re non parla mai.\n").unwrap();
    let (code, out) = call(&["translate", "--trace", "--in", file.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    for stage in ["simplified:", "stream:", "realized:", "syntactic:", "morphological:", "output: Le roi ne parle jamais."] {
        assert!(out.contains(stage), "missing {stage} in {out}");
    }
}

#[test]
fn encode_then_decode() {
    let (code, stream) = call(&["encode", "--in", "dante_it"]);
    assert_eq!(code, 0, "{stream}");
    let path = std::env::temp_dir().join(format!("pucci-stream-{}.txt", std::process::id()));
    std::fs::write(&path, &stream).unwrap();
    let (code, decoded) = call(&["decode", "--in", path.to_str().unwrap()]);
    let (_, translated) = call(&["translate", "--in", "dante_it"]);
    assert_eq!(code, 0);
    assert_eq!(decoded, translated);
}

#[test]
fn score_bleu_line() {
    let (code, out) = call(&["score", "--metric", "bleu", "--candidate", "cochin_1905", "--reference", "pucci_fr_1931"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("metric=bleu score="), "{out}");
}

#[test]
fn score_all_metrics() {
    let (code, out) = call(&["score", "--candidate", "pucci_fr_1931", "--reference", "pucci_fr_1931"]);
    assert_eq!(code, 0);
    assert!(out.contains("metric=bleu score=100.00") && out.contains("metric=chrf score=100.00"), "{out}");
    assert!(out.contains("metric=meteor score="), "{out}");
}

#[test]
fn diff_summary() {
    let (code, out) = call(&["diff", "--a", "pucci_fr_1931", "--b", "chatgpt_pucci"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("removals=") && out.contains(" additions="), "{out}");
    let (_, listing) = call(&["diff", "--listing", "--a", "pucci_fr_1931", "--b", "chatgpt_pucci"]);
    assert!(listing.lines().count() > 1);
}

#[test]
fn stats_lines() {
    let (code, out) = call(&["stats"]);
    assert_eq!(code, 0);
    assert!(out.contains("group=1 mean=21.33 sum=128 n=6"), "{out}");
    assert!(out.contains("group=2_3 mean=23.67 sum=568 n=24"), "{out}");
    assert!(out.contains("identity eta_squared=0.077 cohens_f=0.288831"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(call(&["translate", "--bogus"]).0, 2);
    assert_eq!(call(&["translate", "--pair", "it-de", "--in", "dante_it"]).0, 2);
    let (code, out) = call(&["diff", "--a", "no_such_fixture", "--b", "dante_it"]);
    assert_eq!(code, 2);
    assert!(out.contains("dante_it"), "lists fixtures: {out}");
    assert_eq!(call(&["--data-dir", "/no/such/dir", "translate", "--in", "dante_it"]).0, 2);
    assert_eq!(call(&[]).0, 2);
}

#[test]
fn help_exits_0() {
    let (code, out) = call(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["encode", "decode", "translate", "diff", "score", "stats", "reproduce"] {
        assert!(out.contains(sub), "{sub}");
    }
}

#[test]
fn reproduce_is_deterministic() {
    let (c1, a) = call(&["reproduce"]);
    let (c2, b) = call(&["reproduce"]);
    assert_eq!(a, b);
    assert_eq!(c1, c2);
    assert_eq!(c1, if a.contains("result=PASS") { 0 } else { 1 });
    assert!(a.contains("check=engine_chrf") && a.contains("status=PASS"));
}
