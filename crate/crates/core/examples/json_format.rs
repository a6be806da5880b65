//! Writes each kind of frame document and reads it back.

use coalition_frames::effectivity::{induce_actual, induce_alpha};
use coalition_frames::format::{frame_to_json, parse_frame, FrameFile};
use coalition_frames::scenarios;

fn main() {
    let g = scenarios::heavy_door();
    let files = [
        FrameFile::Gcgf(g.clone()),
        FrameFile::Raw(scenarios::heavy_door_raw()),
        FrameFile::Actual(induce_actual(&g)),
        FrameFile::Alpha(induce_alpha(&g)),
    ];
    for file in files {
        let text = frame_to_json(&file);
        println!("--- {} ---\n{text}", file.kind());
        assert_eq!(parse_frame(&text).expect("own output parses"), file);
    }
}
