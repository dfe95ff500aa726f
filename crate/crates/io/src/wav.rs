//! RIFF/WAVE subset: `fmt ` code 1 at 16 bits and code 3 at 32 bits, little
//! endian, any channel count. Unknown chunks are skipped.

use envelope_core::Signal;

use crate::error::{IoError, Result};

const PCM: u16 = 1;
const IEEE_FLOAT: u16 = 3;
const PCM16_SCALE: f64 = 32768.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WavFormat {
    Pcm16,
    Float32,
}

impl WavFormat {
    fn code(self) -> u16 {
        match self {
            WavFormat::Pcm16 => PCM,
            WavFormat::Float32 => IEEE_FLOAT,
        }
    }

    fn bytes_per_sample(self) -> usize {
        match self {
            WavFormat::Pcm16 => 2,
            WavFormat::Float32 => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WavInfo {
    pub sample_rate: u32,
    pub channels: u16,
    pub format: WavFormat,
    pub frames: usize,
}

fn u16_at(b: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([b[at], b[at + 1]])
}

fn u32_at(b: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([b[at], b[at + 1], b[at + 2], b[at + 3]])
}

fn chunk_field(id: &[u8]) -> &'static str {
    match id {
        b"fmt " => "fmt",
        b"data" => "data",
        _ => "chunk",
    }
}

struct Fmt {
    format: WavFormat,
    channels: u16,
    sample_rate: u32,
}

fn parse_fmt(body: &[u8]) -> Result<Fmt> {
    if body.len() < 16 {
        return Err(IoError::format(
            "fmt",
            format!("chunk is {} bytes, need at least 16", body.len()),
        ));
    }
    let code = u16_at(body, 0);
    let channels = u16_at(body, 2);
    let sample_rate = u32_at(body, 4);
    let block_align = u16_at(body, 12);
    let bits = u16_at(body, 14);

    let format = match code {
        PCM => WavFormat::Pcm16,
        IEEE_FLOAT => WavFormat::Float32,
        other => {
            return Err(IoError::format(
                "audio_format",
                format!("unsupported format code {other}"),
            ))
        }
    };
    let expected_bits = 8 * format.bytes_per_sample() as u16;
    if bits != expected_bits {
        return Err(IoError::format(
            "bits_per_sample",
            format!("{bits} bits with format code {code}, expected {expected_bits}"),
        ));
    }
    if channels == 0 {
        return Err(IoError::format("channels", "zero channels"));
    }
    if sample_rate == 0 {
        return Err(IoError::format("sample_rate", "zero sample rate"));
    }
    let frame_bytes = channels as usize * format.bytes_per_sample();
    if block_align as usize != frame_bytes {
        return Err(IoError::format(
            "block_align",
            format!("{block_align}, expected {frame_bytes}"),
        ));
    }
    Ok(Fmt {
        format,
        channels,
        sample_rate,
    })
}

/// Decodes a WAV byte stream into one signal per channel.
///
/// PCM16 samples map to `v / 32768`; float samples pass through unchanged.
pub fn read_wav(bytes: &[u8]) -> Result<(Vec<Signal>, WavInfo)> {
    if bytes.len() < 12 {
        return Err(IoError::format("riff", "truncated header"));
    }
    if &bytes[0..4] != b"RIFF" {
        return Err(IoError::format(
            "magic",
            format!("expected RIFF, found {:?}", String::from_utf8_lossy(&bytes[0..4])),
        ));
    }
    if &bytes[8..12] != b"WAVE" {
        return Err(IoError::format(
            "form_type",
            format!("expected WAVE, found {:?}", String::from_utf8_lossy(&bytes[8..12])),
        ));
    }

    let mut fmt = None;
    let mut data = None;
    let mut pos = 12;
    while pos < bytes.len() {
        if bytes.len() - pos < 8 {
            return Err(IoError::format("chunk", "truncated chunk header"));
        }
        let id = &bytes[pos..pos + 4];
        let size = u32_at(bytes, pos + 4) as usize;
        let body_start = pos + 8;
        if size > bytes.len() - body_start {
            return Err(IoError::format(
                chunk_field(id),
                format!(
                    "chunk {:?} declares {size} bytes, {} available",
                    String::from_utf8_lossy(id),
                    bytes.len() - body_start
                ),
            ));
        }
        let body = &bytes[body_start..body_start + size];
        match id {
            b"fmt " if fmt.is_none() => fmt = Some(parse_fmt(body)?),
            b"data" if data.is_none() => data = Some(body),
            _ => {}
        }
        // Chunks are word aligned.
        pos = body_start + size + (size & 1);
    }

    let fmt = fmt.ok_or_else(|| IoError::format("fmt", "missing fmt chunk"))?;
    let data = data.ok_or_else(|| IoError::format("data", "missing data chunk"))?;
    let width = fmt.format.bytes_per_sample();
    let channels = fmt.channels as usize;
    let frame_bytes = width * channels;
    if data.len() % frame_bytes != 0 {
        return Err(IoError::format(
            "data",
            format!("{} bytes is not a whole number of {frame_bytes}-byte frames", data.len()),
        ));
    }
    let frames = data.len() / frame_bytes;

    let mut per_channel = vec![Vec::with_capacity(frames); channels];
    for (k, raw) in data.chunks_exact(width).enumerate() {
        let v = match fmt.format {
            WavFormat::Pcm16 => i16::from_le_bytes([raw[0], raw[1]]) as f64 / PCM16_SCALE,
            WavFormat::Float32 => {
                let v = f32::from_le_bytes([raw[0], raw[1], raw[2], raw[3]]);
                if !v.is_finite() {
                    return Err(IoError::format(
                        "data",
                        format!("sample {} is not finite", k / channels),
                    ));
                }
                v as f64
            }
        };
        per_channel[k % channels].push(v);
    }

    let signals = per_channel
        .into_iter()
        .map(|s| {
            Signal::new(s)
                .and_then(|s| s.with_sample_rate(fmt.sample_rate))
                .map_err(|e| IoError::format("data", e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let info = WavInfo {
        sample_rate: fmt.sample_rate,
        channels: fmt.channels,
        format: fmt.format,
        frames,
    };
    Ok((signals, info))
}

/// Encodes a mono WAV. See [`write_wav_channels`].
pub fn write_wav(signal: &Signal, format: WavFormat) -> Result<Vec<u8>> {
    write_wav_channels(std::slice::from_ref(signal), format)
}

/// Encodes equally long channels into a minimal RIFF/WAVE with one `fmt `
/// and one `data` chunk. The sample rate is taken from the first channel.
///
/// PCM16 output clamps to `[-1, 1 - 1/32768]` and rounds to the nearest step.
pub fn write_wav_channels(channels: &[Signal], format: WavFormat) -> Result<Vec<u8>> {
    let first = channels
        .first()
        .ok_or_else(|| IoError::InvalidInput("no channels".into()))?;
    let sample_rate = first
        .sample_rate()
        .ok_or_else(|| IoError::InvalidInput("signal has no sample rate".into()))?;
    let frames = first.len();
    if channels.iter().any(|c| c.len() != frames) {
        return Err(IoError::InvalidInput("channels differ in length".into()));
    }
    let n_channels = u16::try_from(channels.len())
        .map_err(|_| IoError::InvalidInput("too many channels".into()))?;

    let width = format.bytes_per_sample();
    let block_align = width * channels.len();
    let data_len = u32::try_from(block_align * frames)
        .ok()
        .filter(|&n| n <= u32::MAX - 36)
        .ok_or_else(|| IoError::InvalidInput("signal too long for a WAV file".into()))?;

    let mut out = Vec::with_capacity(44 + data_len as usize);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&format.code().to_le_bytes());
    out.extend_from_slice(&n_channels.to_le_bytes());
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&(sample_rate * block_align as u32).to_le_bytes());
    out.extend_from_slice(&(block_align as u16).to_le_bytes());
    out.extend_from_slice(&(8 * width as u16).to_le_bytes());
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for frame in 0..frames {
        for ch in channels {
            let v = ch.samples()[frame];
            match format {
                WavFormat::Pcm16 => {
                    let clamped = v.clamp(-1.0, 1.0 - 1.0 / PCM16_SCALE);
                    let q = (clamped * PCM16_SCALE).round() as i16;
                    out.extend_from_slice(&q.to_le_bytes());
                }
                WavFormat::Float32 => out.extend_from_slice(&(v as f32).to_le_bytes()),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header(code: u16, channels: u16, bits: u16, data: &[u8]) -> Vec<u8> {
        let width = bits as usize / 8;
        let mut b = Vec::new();
        b.extend_from_slice(b"RIFF");
        b.extend_from_slice(&(36 + data.len() as u32).to_le_bytes());
        b.extend_from_slice(b"WAVE");
        b.extend_from_slice(b"fmt ");
        b.extend_from_slice(&16u32.to_le_bytes());
        b.extend_from_slice(&code.to_le_bytes());
        b.extend_from_slice(&channels.to_le_bytes());
        b.extend_from_slice(&8000u32.to_le_bytes());
        b.extend_from_slice(&(8000 * (width * channels as usize) as u32).to_le_bytes());
        b.extend_from_slice(&((width * channels as usize) as u16).to_le_bytes());
        b.extend_from_slice(&bits.to_le_bytes());
        b.extend_from_slice(b"data");
        b.extend_from_slice(&(data.len() as u32).to_le_bytes());
        b.extend_from_slice(data);
        b
    }

    fn pcm_bytes(v: &[i16]) -> Vec<u8> {
        v.iter().flat_map(|s| s.to_le_bytes()).collect()
    }

    fn field(err: IoError) -> &'static str {
        match err {
            IoError::Format { field, .. } => field,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn pcm16_scales_by_32768() {
        let bytes = header(1, 1, 16, &pcm_bytes(&[0, 16384, -16384]));
        let (sig, info) = read_wav(&bytes).unwrap();
        assert_eq!(sig[0].samples(), &[0.0, 0.5, -0.5]);
        assert_eq!(
            info,
            WavInfo {
                sample_rate: 8000,
                channels: 1,
                format: WavFormat::Pcm16,
                frames: 3
            }
        );
        assert_eq!(sig[0].sample_rate(), Some(8000));
    }

    #[test]
    fn float32_passes_through() {
        let data: Vec<u8> = [0.25f32, -1.0].iter().flat_map(|v| v.to_le_bytes()).collect();
        let (sig, info) = read_wav(&header(3, 1, 32, &data)).unwrap();
        assert_eq!(sig[0].samples(), &[0.25, -1.0]);
        assert_eq!(info.format, WavFormat::Float32);
    }

    #[test]
    fn channels_are_deinterleaved() {
        let bytes = header(1, 2, 16, &pcm_bytes(&[1, -1, 2, -2, 3, -3]));
        let (sig, info) = read_wav(&bytes).unwrap();
        assert_eq!(info.channels, 2);
        assert_eq!(info.frames, 3);
        let scaled = |v: &[i16]| v.iter().map(|&x| x as f64 / 32768.0).collect::<Vec<_>>();
        assert_eq!(sig[0].samples(), scaled(&[1, 2, 3]).as_slice());
        assert_eq!(sig[1].samples(), scaled(&[-1, -2, -3]).as_slice());
    }

    #[test]
    fn unknown_chunks_and_fmt_extension_are_skipped() {
        let mut b = Vec::new();
        b.extend_from_slice(b"RIFF\0\0\0\0WAVE");
        b.extend_from_slice(b"LIST");
        b.extend_from_slice(&3u32.to_le_bytes());
        b.extend_from_slice(b"abc\0"); // odd size plus pad byte
        b.extend_from_slice(b"fmt ");
        b.extend_from_slice(&18u32.to_le_bytes());
        b.extend_from_slice(&1u16.to_le_bytes());
        b.extend_from_slice(&1u16.to_le_bytes());
        b.extend_from_slice(&44100u32.to_le_bytes());
        b.extend_from_slice(&88200u32.to_le_bytes());
        b.extend_from_slice(&2u16.to_le_bytes());
        b.extend_from_slice(&16u16.to_le_bytes());
        b.extend_from_slice(&0u16.to_le_bytes());
        b.extend_from_slice(b"data");
        b.extend_from_slice(&4u32.to_le_bytes());
        b.extend_from_slice(&pcm_bytes(&[-32768, 32767]));
        let (sig, info) = read_wav(&b).unwrap();
        assert_eq!(info.sample_rate, 44100);
        assert_eq!(sig[0].samples(), &[-1.0, 32767.0 / 32768.0]);
    }

    #[test]
    fn format_errors_name_the_field() {
        let good = header(1, 1, 16, &pcm_bytes(&[1, 2]));

        let mut rifx = good.clone();
        rifx[..4].copy_from_slice(b"RIFX");
        assert_eq!(field(read_wav(&rifx).unwrap_err()), "magic");

        let mut wave = good.clone();
        wave[8..12].copy_from_slice(b"AVI ");
        assert_eq!(field(read_wav(&wave).unwrap_err()), "form_type");

        assert_eq!(field(read_wav(&good[..good.len() - 1]).unwrap_err()), "data");
        assert_eq!(field(read_wav(&good[..30]).unwrap_err()), "fmt");
        assert_eq!(field(read_wav(&good[..6]).unwrap_err()), "riff");

        let alaw = header(6, 1, 16, &pcm_bytes(&[1]));
        assert_eq!(field(read_wav(&alaw).unwrap_err()), "audio_format");
        let pcm24 = header(1, 1, 24, &[0, 0, 0]);
        assert_eq!(field(read_wav(&pcm24).unwrap_err()), "bits_per_sample");
        let float16 = header(3, 1, 16, &[0, 0]);
        assert_eq!(field(read_wav(&float16).unwrap_err()), "bits_per_sample");

        let data_only = &good[..12]
            .iter()
            .chain(&good[36..])
            .copied()
            .collect::<Vec<_>>();
        assert_eq!(field(read_wav(data_only).unwrap_err()), "fmt");
        assert_eq!(field(read_wav(&good[..36]).unwrap_err()), "data");

        let nan: Vec<u8> = f32::NAN.to_le_bytes().to_vec();
        assert_eq!(field(read_wav(&header(3, 1, 32, &nan)).unwrap_err()), "data");
    }

    #[test]
    fn writer_clamps_pcm16() {
        let s = Signal::new(vec![2.0, -2.0, 0.5])
            .unwrap()
            .with_sample_rate(8000)
            .unwrap();
        let bytes = write_wav(&s, WavFormat::Pcm16).unwrap();
        assert_eq!(bytes.len(), 44 + 6);
        assert_eq!(i16::from_le_bytes([bytes[44], bytes[45]]), 32767);
        assert_eq!(i16::from_le_bytes([bytes[46], bytes[47]]), -32768);
        assert_eq!(i16::from_le_bytes([bytes[48], bytes[49]]), 16384);
    }

    #[test]
    fn writer_needs_a_sample_rate() {
        let s = Signal::new(vec![0.1]).unwrap();
        assert!(matches!(
            write_wav(&s, WavFormat::Float32),
            Err(IoError::InvalidInput(_))
        ));
        assert!(write_wav_channels(&[], WavFormat::Pcm16).is_err());
    }
}
