use crate::error::{Error, Result};
use crate::patterns::Degree;

/// A pitch in an `eta`-tone equal temperament: step index `step` of the
/// octave with index `octave`. Middle C is step 0 of octave 4 in the
/// 12-tone temperament.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Note {
    step: u32,
    octave: i32,
    eta: u32,
}

impl Note {
    pub fn new(step: u32, octave: i32, eta: u32) -> Result<Note> {
        if eta == 0 || step >= eta {
            return Err(Error::StepOutOfRange {
                step: step as i64,
                eta,
            });
        }
        Ok(Note { step, octave, eta })
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn octave(&self) -> i32 {
        self.octave
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// Absolute height in semitones: `octave · eta + step`.
    pub fn semitone(&self) -> i64 {
        self.octave as i64 * self.eta as i64 + self.step as i64
    }

    pub fn from_semitone(semitone: i64, eta: u32) -> Result<Note> {
        if eta == 0 {
            return Err(Error::StepOutOfRange { step: 0, eta });
        }
        let octave = semitone.div_euclid(eta as i64);
        let step = semitone.rem_euclid(eta as i64) as u32;
        let octave = i32::try_from(octave).map_err(|_| Error::DegreeOverflow)?;
        Note::new(step, octave, eta)
    }
}

/// An integer composition of the octave: successive semitone steps whose
/// sum is the temperament size. `(2, 2, 1, 2, 2, 2, 1)` is the major
/// natural scale of the 12-tone temperament.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scale {
    parts: Vec<u32>,
    eta: u32,
}

impl Scale {
    pub fn new(parts: Vec<u32>) -> Result<Scale> {
        if parts.is_empty() {
            return Err(Error::InvalidScale(
                "a scale needs at least one part".into(),
            ));
        }
        let eta: u64 = parts.iter().map(|p| *p as u64).sum();
        let eta = u32::try_from(eta)
            .map_err(|_| Error::InvalidScale("the parts sum exceeds the supported range".into()))?;
        if eta == 0 {
            return Err(Error::InvalidScale("the parts must not all be zero".into()));
        }
        Ok(Scale { parts, eta })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size of the temperament this scale divides.
    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// Number of parts.
    pub fn step_count(&self) -> usize {
        self.parts.len()
    }

    /// Zero parts are legal but make distinct degrees share a pitch;
    /// worth a warning at the surface.
    pub fn has_zero_parts(&self) -> bool {
        self.parts.contains(&0)
    }

    pub fn major() -> Scale {
        Scale::new(vec![2, 2, 1, 2, 2, 2, 1]).expect("static scale")
    }

    pub fn harmonic_minor() -> Scale {
        Scale::new(vec![2, 1, 2, 2, 1, 3, 1]).expect("static scale")
    }

    pub fn natural_minor() -> Scale {
        Scale::new(vec![2, 1, 2, 2, 1, 2, 2]).expect("static scale")
    }

    pub fn hirajoshi() -> Scale {
        Scale::new(vec![2, 1, 4, 1, 4]).expect("static scale")
    }

    /// The built-in scale of that name, if any.
    pub fn named(name: &str) -> Option<Scale> {
        match name {
            "major" => Some(Scale::major()),
            "harmonic-minor" => Some(Scale::harmonic_minor()),
            "natural-minor" => Some(Scale::natural_minor()),
            "hirajoshi" => Some(Scale::hirajoshi()),
            _ => None,
        }
    }
}

/// A scale anchored at a root note of the same temperament. Degree 0 maps
/// to the root, positive degrees walk the parts upward (cyclically),
/// negative degrees walk them downward from the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedScale {
    scale: Scale,
    root: Note,
}

impl RootedScale {
    pub fn new(scale: Scale, root: Note) -> Result<RootedScale> {
        if scale.eta() != root.eta() {
            return Err(Error::TemperamentMismatch {
                scale_eta: scale.eta(),
                root_eta: root.eta(),
            });
        }
        Ok(RootedScale { scale, root })
    }

    pub fn scale(&self) -> &Scale {
        &self.scale
    }

    pub fn root(&self) -> Note {
        self.root
    }

    /// The note reached from the root by walking `degree` scale steps.
    pub fn note_for_degree(&self, degree: Degree) -> Result<Note> {
        let parts = self.scale.parts();
        let count = parts.len() as i64;
        let d = degree.value();

        // Whole cycles jump by eta; the remainder walks parts one by one,
        // from the front going up and from the back going down.
        let (cycles, remainder) = (d.div_euclid(count), d.rem_euclid(count) as usize);
        let walked: i64 = parts[..remainder].iter().map(|p| *p as i64).sum();
        let offset = (cycles as i128) * (self.scale.eta() as i128) + walked as i128;

        let semitone = self.root.semitone() as i128 + offset;
        let semitone = i64::try_from(semitone).map_err(|_| Error::DegreeOverflow)?;
        Note::from_semitone(semitone, self.scale.eta())
    }
}

/// Playback speed in rests-and-beats (eighth notes) per minute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tempo(u32);

impl Tempo {
    pub fn new(eighths_per_minute: u32) -> Result<Tempo> {
        if eighths_per_minute == 0 {
            return Err(Error::ZeroTempo);
        }
        Ok(Tempo(eighths_per_minute))
    }

    pub fn eighths_per_minute(self) -> u32 {
        self.0
    }

    /// Duration of one unit, in seconds.
    pub fn unit_seconds(self) -> f64 {
        60.0 / self.0 as f64
    }
}
