//! Compiles every Rust listing in `book/src` as a doctest.

macro_rules! chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub mod $name {}
        )*
    };
}

chapters! {
    introduction => "introduction.md",
    dicke => "dicke.md",
    stars => "stars.md",
    entanglement => "entanglement.md",
    geometry => "geometry.md",
    oracle => "oracle.md",
    cli => "cli.md",
}
