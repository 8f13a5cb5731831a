// Load, validate and re-serialize objects in the `hyperbox/1` JSON format.
//
// `cargo run --example documents -- path_r(2) chorded_square` prints the
// canonical document of each named generator.

use hyperbox::core::generators::{generator, path_r, Object};
use hyperbox::document::{parse_document, to_json};

pub fn run_example() -> hyperbox::Result<String> {
    let p = Object::Incidence(path_r(2));
    let text = to_json(&p, None);
    let back = parse_document(&text)?;
    assert_eq!(back.object, p);

    let broken = text.replacen("\"e0\"\n    ]", "\"e9\"\n    ]", 1);
    if let Err(e) = parse_document(&broken) {
        println!("rejected: {e}");
    }
    Ok(text)
}

fn main() -> hyperbox::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        print!("{}", run_example()?);
    }
    for n in names {
        match generator(&n) {
            Some(o) => print!("{}", to_json(&o, None)),
            None => eprintln!("unknown generator `{n}`"),
        }
    }
    Ok(())
}
