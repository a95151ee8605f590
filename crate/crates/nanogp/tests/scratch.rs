#[test]
fn scratch_wronskian60() {
    use num_complex::Complex64;
    use nanogp::specfun::*;
    let x = 0.7f64;
    let z = Complex64::new(x, 0.0);
    let j = sph_bessel_j_seq(60, z).unwrap();
    println!("j0 {} vs closed {}", j[0], z.sin()/z);
    println!("j1 {} vs closed {}", j[1], z.sin()/(z*z)-z.cos()/z);
    println!("j5 {}", j[5]);
    println!("j59 {:e}", j[59]);
    println!("j60 {:e}", j[60]);
    let h = sph_hankel1_seq(60, z).unwrap();
    println!("h60 {:e}", h[60]);
    let dj = riccati_dj_seq(60, z).unwrap();
    let dh = riccati_dh_seq(60, z).unwrap();
    for n in [0usize, 1, 30, 60] {
        let jp = dj[n] - j[n]/z;
        let hp = dh[n] - h[n]/z;
        let w = j[n]*hp - jp*h[n];
        let err = (w - Complex64::new(0.0, 1.0/(x*x))).norm()*x*x;
        println!("n={} err={:e}", n, err);
    }
}
