//! Runs each capability example so they stay in working order.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(evaluate);
example!(position_language);
example!(counting);
example!(note_pairs);
example!(repetitions);
example!(characterize);
example!(custom_sequence);
example!(render_pitches);
