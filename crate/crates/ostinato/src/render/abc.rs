//! ABC text output for rendered phrases.
//!
//! Only the 12-tone temperament has a sound ABC spelling, so other
//! temperaments are rejected (the JSON export covers them). Durations are
//! always written explicitly, pitch spelling always uses sharps, and a
//! bar line is placed after every 8 units without ever splitting a
//! sustained note: a note crossing a bar boundary is written once, with
//! its full duration.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::render::phrase::Phrase;
use crate::render::scale::Note;

/// Step names of the 12-tone octave, sharps only.
const STEP_NAMES: [&str; 12] = [
    "C", "^C", "D", "^D", "E", "F", "^F", "G", "^G", "A", "^A", "B",
];

const UNITS_PER_BAR: usize = 8;

/// Tune header fields; everything else is fixed by the rendering
/// convention (`M:8/8`, `L:1/8`, `Q` from the phrase's tempo).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcHeader {
    pub index: u32,
    pub title: String,
    pub key: String,
}

impl Default for AbcHeader {
    fn default() -> Self {
        AbcHeader {
            index: 1,
            title: String::new(),
            key: "Am".into(),
        }
    }
}

/// Spells one note: accidental, letter, octave marks. Octave 4 is the
/// bare uppercase letter; each octave below appends `,`; octave 5 and
/// above use lowercase, with one `'` per octave above 5.
fn spell(note: Note) -> String {
    let name = STEP_NAMES[note.step() as usize];
    let octave = note.octave();
    if octave >= 5 {
        let mut spelled = name.to_lowercase();
        spelled.extend(std::iter::repeat_n('\'', (octave - 5) as usize));
        spelled
    } else {
        let mut spelled = name.to_string();
        spelled.extend(std::iter::repeat_n(',', (4 - octave) as usize));
        spelled
    }
}

fn write_voice(phrase: &Phrase, voice: usize, out: &mut String) {
    let mut tokens: Vec<(String, usize)> = Vec::new();
    let mut position = 0;
    for event in phrase.voice_events(voice) {
        if event.onset > position {
            // Silence is only possible before the first beat.
            tokens.push(("z".into(), event.onset - position));
            position = event.onset;
        }
        tokens.push((spell(event.note), event.duration));
        position += event.duration;
    }
    if position < phrase.total_units() {
        tokens.push(("z".into(), phrase.total_units() - position));
    }

    position = 0;
    for (index, (name, duration)) in tokens.iter().enumerate() {
        if index > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{name}{duration}");
        position += duration;
        if position % UNITS_PER_BAR == 0 {
            out.push_str(" |");
        }
    }
    out.push('\n');
}

/// Writes a whole ABC tune. Single-voice phrases inline the music
/// directly; multi-voice phrases get one `V:voice<i>` section per voice.
pub fn to_abc(phrase: &Phrase, header: &AbcHeader) -> Result<String> {
    if let Some(event) = phrase.events().iter().find(|e| e.note.eta() != 12) {
        return Err(Error::UnsupportedTemperament(event.note.eta()));
    }
    let mut out = String::new();
    let _ = writeln!(out, "X:{}", header.index);
    let _ = writeln!(out, "T:{}", header.title);
    let _ = writeln!(out, "K:{}", header.key);
    let _ = writeln!(out, "M:8/8");
    let _ = writeln!(out, "L:1/8");
    let _ = writeln!(out, "Q:1/8={}", phrase.tempo().eighths_per_minute());
    if phrase.voice_count() == 1 {
        write_voice(phrase, 1, &mut out);
    } else {
        for voice in 1..=phrase.voice_count() {
            let _ = writeln!(out, "V:voice{voice}");
            write_voice(phrase, voice, &mut out);
        }
    }
    Ok(out)
}
