use kschub::expr::parse;

const CORPUS: &str = include_str!("data/parser_corpus.tsv");

#[test]
fn golden_corpus() {
    let mut cases = 0;
    for line in CORPUS.lines().filter(|l| !l.starts_with('#') && !l.is_empty()) {
        let fields: Vec<&str> = line.split('\t').collect();
        match fields[0] {
            "accept" => {
                let p = parse(fields[1]).unwrap_or_else(|e| panic!("{:?} rejected: {e}", fields[1]));
                assert_eq!(p.to_string(), fields[2], "input {:?}", fields[1]);
                let again = parse(&p.to_string()).unwrap();
                assert_eq!(again.to_string(), fields[2], "reparse of {:?}", fields[1]);
            }
            "reject" => {
                let e = parse(fields[1]).expect_err(fields[1]);
                assert_eq!(e.position.to_string(), fields[2], "input {:?}: {e}", fields[1]);
                assert!(e.message.contains(fields[3]), "input {:?}: {e}", fields[1]);
            }
            other => panic!("bad verdict {other}"),
        }
        cases += 1;
    }
    assert_eq!(cases, 50);
}
