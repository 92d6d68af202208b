use ringcheck::expr::{parse_ideal_spec, parse_ring_expr};

fn main() {
    for text in [
        "M( 2 , Z(2) )",
        "quot(Zi(6), gen(0+2i))",
        "corner(T(2,Z(3)), [1, 0, 0])",
        "Zi(3",
        "M(2,Q(2))",
        "Z(0)",
    ] {
        match parse_ring_expr(text) {
            Ok(e) => println!("{text:<32} => {e}"),
            Err(e) => println!("{text:<32} => {e}"),
        }
    }
    for text in ["jacobson", "gen(2, 3)", "gen()"] {
        match parse_ideal_spec(text) {
            Ok(i) => println!("{text:<32} => {i}"),
            Err(e) => println!("{text:<32} => {e}"),
        }
    }
}
