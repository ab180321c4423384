//! Generate a short two-voice tune and print it as ABC text.
//!
//! ```sh
//! cargo run --example tune
//! ```

use ostinato::budgen::{demo_system, generate_partial, replay, RandomSource};
use ostinato::render::{render, to_abc, AbcHeader, Note, RootedScale, Scale, Tempo};

fn main() -> ostinato::Result<()> {
    let system = demo_system();
    let (pattern, trace) = generate_partial(&system, 8, &mut RandomSource::new(42))?;
    assert_eq!(replay(&system, &trace)?, pattern);
    println!("pattern: {pattern}");

    let scale = RootedScale::new(Scale::hirajoshi(), Note::new(9, 3, 12)?)?;
    let phrase = render(&pattern, &scale, Tempo::new(128)?)?;
    print!("{}", to_abc(&phrase, &AbcHeader::default())?);
    Ok(())
}
