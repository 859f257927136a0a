//! FFT-based autocorrelation shared by several catch22 kernels.
//!
//! The FFT is a deliberate bit-for-bit port of the reference radix-2
//! implementation (naive complex arithmetic, truncated pi in the twiddle
//! table, forward transform applied twice, complex division by lag 0).
//! Several kernels make strict comparisons between autocorrelation values
//! that are mathematically tied, so the exact rounding of this FFT is part
//! of the observable behaviour.

use std::ops::{Add, Mul, Sub};

/// Complex double with C99-style naive arithmetic (no FMA, no special-case
/// rescue paths), so every operation rounds exactly like the reference.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cplx {
    pub re: f64,
    pub im: f64,
}

impl Cplx {
    pub fn new(re: f64, im: f64) -> Self {
        Cplx { re, im }
    }

    pub fn conj(self) -> Self {
        Cplx::new(self.re, -self.im)
    }

    /// Magnitude via hypot, mirroring `cabs`.
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Division with the textbook formula (no Smith scaling), as the
    /// reference implements it.
    pub fn div(self, rhs: Cplx) -> Cplx {
        let (a, b) = (self.re, self.im);
        let (c, d) = (rhs.re, rhs.im);
        let den = c * c + d * d;
        Cplx::new((a * c + b * d) / den, (b * c - a * d) / den)
    }
}

impl Add for Cplx {
    type Output = Cplx;
    fn add(self, rhs: Cplx) -> Cplx {
        Cplx::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Cplx {
    type Output = Cplx;
    fn sub(self, rhs: Cplx) -> Cplx {
        Cplx::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Cplx {
    type Output = Cplx;
    fn mul(self, rhs: Cplx) -> Cplx {
        Cplx::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

// Deliberately truncated: feature values are pinned to a transform whose
// twiddles use this constant, and the exact PI changes their low bits.
#[allow(clippy::approx_constant)]
const PI_REF: f64 = 3.14159265359;

fn twiddles(size: usize) -> Vec<Cplx> {
    (0..size)
        .map(|i| {
            let theta = -(PI_REF * i as f64 / size as f64);
            Cplx::new(theta.cos(), theta.sin())
        })
        .collect()
}

fn fft_rec(a: &mut [Cplx], out: &mut [Cplx], off: usize, size: usize, step: usize, tw: &[Cplx]) {
    if step < size {
        fft_rec(out, a, off, size, step * 2, tw);
        fft_rec(out, a, off + step, size, step * 2, tw);
        let mut i = 0;
        while i < size {
            let t = tw[i] * out[off + i + step];
            a[off + i / 2] = out[off + i] + t;
            a[off + (i + size) / 2] = out[off + i] - t;
            i += 2 * step;
        }
    }
}

/// Unnormalised forward DFT (power-of-two length), shared with the Welch
/// spectrum kernel.
pub fn fft_in_place(buf: &mut [Cplx]) {
    let size = buf.len();
    debug_assert!(size.is_power_of_two());
    let tw = twiddles(size);
    let mut out = buf.to_vec();
    fft_rec(buf, &mut out, 0, size, 1, &tw);
}

/// Normalised autocorrelation: mean-removed series zero-padded to twice the
/// next power of two, |FFT|^2 transformed forward again, divided by the
/// complex lag-0 value. Entries at lags >= len(y) come from the padding,
/// matching the reference convention of indexing past the last meaningful
/// lag. A constant series divides zero by zero and yields NaN throughout.
pub fn autocorr(y: &[f64]) -> Vec<f64> {
    let n = y.len();
    let n_fft = n.next_power_of_two() << 1;
    let mean = y.iter().sum::<f64>() / n as f64;
    let mut buf: Vec<Cplx> = y
        .iter()
        .map(|&v| Cplx::new(v - mean, 0.0))
        .chain(std::iter::repeat(Cplx::new(0.0, 0.0)))
        .take(n_fft)
        .collect();
    fft_in_place(&mut buf);
    for v in buf.iter_mut() {
        *v = *v * v.conj();
    }
    fft_in_place(&mut buf);
    let divisor = buf[0];
    buf.iter().map(|v| v.div(divisor).re).collect()
}

/// Index of the first non-positive autocorrelation, capped at `maxtau`.
/// The negated comparison is load-bearing: it also stops on NaN (constant
/// series), while `<= 0.0` would not.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn first_zero(acf: &[f64], maxtau: usize) -> usize {
    (0..maxtau).find(|&t| !(acf[t] > 0.0)).unwrap_or(maxtau)
}
