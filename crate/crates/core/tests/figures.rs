#[allow(dead_code)]
mod figures {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/figures.rs"));
}

#[test]
fn dot_matches_golden_files() {
    let dir = figures::data_dir().join("figures");
    let rendered = figures::run_example().unwrap();
    for (name, dot) in &rendered {
        let golden = std::fs::read_to_string(dir.join(format!("{name}.dot"))).unwrap();
        assert_eq!(&golden, dot, "{name}.dot differs");
    }
    let committed = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(committed, rendered.len(), "stray or missing golden files");
    assert_eq!(figures::run_example().unwrap(), rendered);
}

#[test]
fn every_input_document_is_canonical() {
    use hyperbox::document::{read_document, to_json};
    for entry in std::fs::read_dir(figures::data_dir().join("inputs")).unwrap() {
        let path = entry.unwrap().path();
        let doc = read_document(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(to_json(&doc.object, doc.orientation.as_ref()), text, "{}", path.display());
    }
}
