//! Reading hypergraphs in the simple line format and in MMP notation.

use contextuality::hypergraph::{mep, parse_hypergraph, Format};
use contextuality::states::enumerate_states;

fn main() {
    let simple = "# the pruned gadget\n1 2 3\n1,4,5\n2 6 7\n3 8 9\n";
    let h = parse_hypergraph(simple, Format::Simple).unwrap();
    println!("simple: {h}");
    println!("        {} states", enumerate_states(&h).state_count());

    let mmp = "123,345,567,789,9AB,BCD,DEF,FGH,HI1,28E,4AG.";
    let h = parse_hypergraph(mmp, Format::Mmp).unwrap();
    println!("mmp:    {h}");
    println!("        {} states", enumerate_states(&h).state_count());

    println!("round trip: {}", h.to_mmp().unwrap());

    // integer labels above 9 have no single-character form
    print!("\nMEP in the simple format:\n{}", mep().to_simple());
    println!("to_mmp: {}", mep().to_mmp().unwrap_err());

    match parse_hypergraph("123,34", Format::Mmp) {
        Err(e) => println!("\nmalformed input: {e}"),
        Ok(_) => unreachable!(),
    }
}
