//! Read and write the `.quant` text format, and what the parser reports on
//! bad input.

use quantale_ideals::generators::Generator;
use quantale_ideals::io::{parse_quant, write_quant};

fn main() {
    let q = Generator::Lukasiewicz(4).generate().unwrap();
    let text = write_quant(&q);
    print!("{text}");
    assert_eq!(parse_quant(&text).unwrap(), q);

    for bad in [
        text.replace("order:", "order"),
        text.replace("1 <= 2", "1 <= 9"),
        text.replace("  3: 0 1 2 3\n", ""),
        text.replace("  2: 0 0 1 2", "  2: 0 0 1"),
    ] {
        println!("{}", parse_quant(&bad).unwrap_err());
    }
}
