//! Bit vectors with rank and select, a choice dictionary with constant-time
//! clearing, and balanced parentheses with matching.

use std::error::Error;

use spantd::succinct::{BalParen, BitVec, ChoiceDict, IntVec, RankSelect};

pub fn run() -> Result<(), Box<dyn Error>> {
    let bits = RankSelect::new(BitVec::from_str01("0110100111"));
    println!("ones before position 5: {}", bits.rank1(5));
    println!("third one at position {}", bits.select1(2));
    assert_eq!((bits.rank1(5), bits.select1(2)), (3, 4));

    let mut chosen = ChoiceDict::new(1000);
    for v in [7, 42, 999] {
        chosen.add(v);
    }
    println!("choice dictionary holds {:?}", chosen.iter().collect::<Vec<_>>());
    chosen.clear();
    assert!(chosen.is_empty());

    let tree = BalParen::parse("(()(()))")?;
    println!("the root closes at {}", tree.findclose(0)?);
    assert_eq!(tree.findclose(3)?, 6);

    let mut counts = IntVec::for_max(4, 300);
    counts.set(2, 300);
    println!("{} entries of {} bits, entry 2 = {}", counts.len(), counts.width(), counts.get(2));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run()
}
