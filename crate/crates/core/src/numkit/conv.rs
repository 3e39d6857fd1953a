//! 1D convolution with symmetric padding.
//!
//! Padding mode is repeated-edge: every out-of-range index clamps to the
//! nearest edge sample, so the edge value repeats at any padding depth. This
//! also makes kernels longer than the signal well defined.

use crate::error::{Error, Result};

/// Convolve `signal` with an odd-length `kernel`, output length = input length.
/// A kernel that sums to 1 leaves constant signals unchanged exactly.
pub fn conv1d_symmetric(signal: &[f64], kernel: &[f64]) -> Result<Vec<f64>> {
    if signal.is_empty() {
        return Err(Error::EmptyInput("conv1d_symmetric signal"));
    }
    if kernel.is_empty() || kernel.len() % 2 == 0 {
        return Err(Error::InvalidParam(format!(
            "kernel length must be odd and positive, got {}",
            kernel.len()
        )));
    }
    let n = signal.len() as isize;
    let radius = (kernel.len() / 2) as isize;
    let mut out = Vec::with_capacity(signal.len());
    for i in 0..n {
        let mut acc = 0.0;
        for t in -radius..=radius {
            let idx = (i + t).clamp(0, n - 1) as usize;
            acc += kernel[(t + radius) as usize] * signal[idx];
        }
        out.push(acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const G5: [f64; 5] = [1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0, 1.0 / 16.0];

    #[test]
    fn constant_signal_unchanged() {
        let sig = vec![3.25; 5];
        let out = conv1d_symmetric(&sig, &G5).unwrap();
        for v in out {
            assert_eq!(v, 3.25);
        }
    }

    #[test]
    fn interior_impulse_reproduces_kernel() {
        let sig = [0.0, 0.0, 1.0, 0.0, 0.0];
        let out = conv1d_symmetric(&sig, &G5).unwrap();
        for (o, k) in out.iter().zip(G5.iter()) {
            assert_eq!(o, k);
        }
    }

    #[test]
    fn boundary_impulse_repeated_edge() {
        // edge sample repeats at all padding depths, so taps 6, 4, 1 all land on it
        let sig = [1.0, 0.0, 0.0, 0.0, 0.0];
        let out = conv1d_symmetric(&sig, &G5).unwrap();
        assert_eq!(out[0], 11.0 / 16.0);
        // brute-force oracle: explicit padded signal [1,1,1,0,0,0,0,0,0]
        let padded = [1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        for i in 0..5 {
            let oracle: f64 = (0..5).map(|t| G5[t] * padded[i + t]).sum();
            assert_eq!(out[i], oracle, "position {i}");
        }
    }

    #[test]
    fn kernel_longer_than_signal() {
        let sig = [2.0, 2.0];
        let out = conv1d_symmetric(&sig, &G5).unwrap();
        assert_eq!(out, vec![2.0, 2.0]);
    }

    #[test]
    fn empty_signal_rejected() {
        assert!(conv1d_symmetric(&[], &G5).is_err());
    }

    #[test]
    fn even_kernel_rejected() {
        assert!(conv1d_symmetric(&[1.0, 2.0], &[0.5, 0.5]).is_err());
    }
}
