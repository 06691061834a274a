//! Synthetic page layouts shared by the integration and acceptance tests.
//!
//! The bundled files under `tests/fixtures/` are generated from here; run
//! `GCE_BLESS=1 cargo test -p gce-core --test fixtures` after changing a
//! layout.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use gce_core::{GroundTruth, NodeId, PageSnapshot, Rect, Size, SnapshotBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Script {
    English,
    French,
    Indonesian,
    Russian,
    Chinese,
    Japanese,
    Korean,
    Arabic,
}

impl Script {
    fn sentences(self) -> &'static [&'static str] {
        match self {
            Script::English => &[
                "The council approved the new transit plan after a long public hearing.",
                "Residents said the changes would shorten their daily commute considerably.",
                "Officials expect construction to begin early next spring.",
                "Critics argued that the budget estimates were far too optimistic.",
                "The report also recommends more frequent service on weekends.",
            ],
            Script::French => &[
                "Le conseil municipal a adopté le nouveau plan de transport hier soir.",
                "Les habitants estiment que les travaux dureront au moins deux ans.",
                "Le budget prévoit une hausse importante des investissements publics.",
            ],
            Script::Indonesian => &[
                "Pemerintah daerah mengumumkan rencana pembangunan jalan baru.",
                "Warga berharap proyek ini dapat mengurangi kemacetan setiap hari.",
                "Anggaran proyek akan dibahas kembali pada bulan depan.",
            ],
            Script::Russian => &[
                "Городской совет утвердил новый план развития транспорта.",
                "Жители считают, что изменения сократят время в пути.",
                "Строительство должно начаться уже следующей весной.",
            ],
            Script::Chinese => &[
                "市政府昨日公布了新的公共交通规划方案。",
                "居民表示新线路将大大缩短通勤时间。",
                "预计工程将于明年春季正式开工。",
            ],
            Script::Japanese => &[
                "市は新しい交通計画を発表しました。",
                "住民は通勤時間が短くなると期待しています。",
                "工事は来年の春に始まる予定です。",
            ],
            Script::Korean => &[
                "시는 새로운 교통 계획을 발표했다.",
                "주민들은 출퇴근 시간이 줄어들 것으로 기대한다.",
                "공사는 내년 봄에 시작될 예정이다.",
            ],
            Script::Arabic => &[
                "أعلنت البلدية عن خطة جديدة لتطوير شبكة النقل العام.",
                "قال السكان إن التغييرات ستختصر وقت التنقل اليومي.",
                "من المتوقع أن تبدأ أعمال البناء في الربيع المقبل.",
            ],
        }
    }

    fn menu(self) -> &'static [&'static str] {
        match self {
            Script::Chinese => &[
                "首页", "新闻", "体育", "财经", "科技", "娱乐", "汽车", "房产", "教育", "健康",
                "旅游", "视频",
            ],
            Script::Japanese => &[
                "ホーム",
                "国内",
                "国際",
                "経済",
                "スポーツ",
                "科学",
                "文化",
                "天気",
                "動画",
                "特集",
            ],
            Script::Korean => &[
                "홈",
                "정치",
                "경제",
                "사회",
                "국제",
                "문화",
                "스포츠",
                "연예",
                "날씨",
                "영상",
            ],
            Script::Arabic => &[
                "الرئيسية",
                "أخبار",
                "رياضة",
                "اقتصاد",
                "تقنية",
                "ثقافة",
                "فيديو",
            ],
            Script::Russian => &[
                "Главная",
                "Новости",
                "Спорт",
                "Экономика",
                "Наука",
                "Культура",
                "Видео",
            ],
            Script::French => &[
                "Accueil",
                "Actualités",
                "Sport",
                "Économie",
                "Culture",
                "Vidéos",
            ],
            Script::Indonesian => &[
                "Beranda",
                "Berita",
                "Olahraga",
                "Ekonomi",
                "Teknologi",
                "Hiburan",
            ],
            Script::English => &[
                "Home", "World", "Business", "Sport", "Science", "Culture", "Video",
            ],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Marker {
    /// Content wrapped in `<article>`.
    Tag,
    /// Content wrapped in a div with this class.
    Class(&'static str),
    /// Content wrapped in a div with this id.
    Id(&'static str),
    /// Narrow plain column centered in a full-width band.
    Width,
    /// Plain column next to a sidebar inside a wide wrapper.
    WideWrapper,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sidebar {
    None,
    Related,
    AdRail,
    Toc,
}

#[derive(Debug, Clone)]
pub struct Layout {
    pub name: &'static str,
    pub window: Size,
    pub script: Script,
    pub rtl: bool,
    pub marker: Marker,
    pub paragraphs: usize,
    pub sidebar: Sidebar,
    pub comments: usize,
    pub cookie_banner: bool,
    pub fixed_header: bool,
    pub hidden_modal: bool,
    pub teasers: bool,
    pub figure: bool,
    pub seed: u64,
}

impl Layout {
    fn new(name: &'static str, script: Script, marker: Marker) -> Self {
        Layout {
            name,
            window: Size::new(1920.0, 1080.0),
            script,
            rtl: matches!(script, Script::Arabic),
            marker,
            paragraphs: 12,
            sidebar: Sidebar::Related,
            comments: 0,
            cookie_banner: false,
            fixed_header: false,
            hidden_modal: false,
            teasers: false,
            figure: true,
            seed: name
                .bytes()
                .fold(7u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64)),
        }
    }
}

pub struct Fixture {
    pub name: String,
    pub snapshot: PageSnapshot,
    pub truth: GroundTruth,
}

struct Gen {
    b: SnapshotBuilder,
    rng: ChaCha8Rng,
    script: Script,
}

impl Gen {
    fn para_text(&mut self, lines: usize) -> String {
        let pool = self.script.sentences();
        let n = lines.max(1) * 2;
        (0..n)
            .map(|_| pool[self.rng.gen_range(0..pool.len())])
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn block(&mut self, parent: NodeId, tag: &str, r: Rect, text: &str) -> NodeId {
        let e = self.b.element(parent, tag, r);
        self.b.text(e, r, text);
        e
    }

    /// Link whose text sits inside the anchor box.
    fn anchor(&mut self, parent: NodeId, r: Rect, label: &str) -> NodeId {
        let a = self.b.element(parent, "a", r);
        self.b.node_mut(a).is_link = true;
        let tw = (r.w - 16.0).max(8.0);
        let th = (r.h - 12.0).clamp(8.0, 24.0);
        self.b.text(
            a,
            Rect::new(r.x + 8.0, r.y + (r.h - th) / 2.0, tw, th),
            label,
        );
        a
    }

    fn menu(&mut self, parent: NodeId, r: Rect, labels: &[&str]) -> NodeId {
        let ul = self.b.element(parent, "ul", r);
        let iw = r.w / labels.len() as f64;
        for (k, label) in labels.iter().enumerate() {
            let cell = Rect::new(r.x + k as f64 * iw, r.y, iw, r.h);
            let li = self.b.element(ul, "li", cell);
            self.anchor(
                li,
                Rect::new(cell.x + 2.0, cell.y, cell.w - 4.0, cell.h),
                label,
            );
        }
        ul
    }

    fn link_list(
        &mut self,
        parent: NodeId,
        x: f64,
        y: f64,
        w: f64,
        items: usize,
        item_h: f64,
    ) -> f64 {
        let ul = self
            .b
            .element(parent, "ul", Rect::new(x, y, w, items as f64 * item_h));
        for k in 0..items {
            let r = Rect::new(x, y + k as f64 * item_h, w, item_h);
            let li = self.b.element(ul, "li", r);
            let label = self.para_text(1);
            let label: String = label.chars().take(40).collect();
            self.anchor(li, r, &label);
        }
        y + items as f64 * item_h
    }
}

pub fn generate(l: &Layout) -> Fixture {
    let win = l.window;
    let w = win.w;
    let margin = (w * 0.08).round();
    let inner_w = w - 2.0 * margin;
    let header_h = 100.0;
    let footer_h = 260.0;

    // document height is only known at the end
    let mut g = Gen {
        b: SnapshotBuilder::new(win, Size::new(w, 100_000.0)),
        rng: ChaCha8Rng::seed_from_u64(l.seed),
        script: l.script,
    };
    let body = g.b.root();

    let header =
        g.b.element(body, "header", Rect::new(0.0, 0.0, w, header_h));
    g.b.class(header, "site-header");
    g.b.node_mut(header).position_fixed = l.fixed_header;
    g.anchor(
        header,
        Rect::new(margin, 20.0, 220.0, 60.0),
        "Daily Courier",
    );
    g.menu(
        header,
        Rect::new(margin + 300.0, 20.0, inner_w - 300.0, 60.0),
        l.script.menu(),
    );

    let top = header_h + 30.0;
    let has_sidebar = l.sidebar != Sidebar::None;
    let (col_x, col_w) = match (l.marker, l.sidebar) {
        (Marker::Width, _) => (((w - 760.0) / 2.0).round(), 760.0),
        (_, Sidebar::Toc) => (margin + inner_w * 0.25, inner_w * 0.75),
        (Marker::WideWrapper, _) => (margin, (inner_w * 0.55).round()),
        (_, s) if s != Sidebar::None => (margin, (inner_w * 0.66).round()),
        _ => (margin + inner_w * 0.1, inner_w * 0.8),
    };

    let wrapper_rect = match l.marker {
        Marker::Width => Rect::new(0.0, top, w, 0.0),
        _ => Rect::new(margin, top, inner_w, 0.0),
    };
    let wrapper = g.b.element(
        body,
        if l.marker == Marker::Width {
            "section"
        } else {
            "div"
        },
        wrapper_rect,
    );
    g.b.class(
        wrapper,
        if l.marker == Marker::Width {
            "band"
        } else {
            "page-wrap"
        },
    );

    let (main_tag, class, id) = match l.marker {
        Marker::Tag => ("article", "", ""),
        Marker::Class(c) => ("div", c, ""),
        Marker::Id(i) => ("div", "", i),
        Marker::Width | Marker::WideWrapper => ("div", "col", ""),
    };
    let main =
        g.b.element(wrapper, main_tag, Rect::new(col_x, top, col_w, 0.0));
    g.b.class(main, class);
    g.b.id_attr(main, id);

    let px = col_x + 20.0;
    let pw = col_w - 40.0;
    let mut y = top + 20.0;
    let title = g.para_text(1);
    let title: String = title.chars().take(60).collect();
    g.block(main, "h1", Rect::new(px, y, pw, 56.0), &title);
    y += 72.0;
    g.block(main, "div", Rect::new(px, y, pw, 24.0), "2024-05-14 08:30");
    y += 40.0;

    for k in 0..l.paragraphs {
        let lines = g.rng.gen_range(2..7);
        let h = lines as f64 * 28.0;
        let text = g.para_text(lines);
        g.block(main, "p", Rect::new(px, y, pw, h), &text);
        y += h + 18.0;
        if l.figure && k == 1 {
            let fig = g.b.element(main, "figure", Rect::new(px, y, pw, 360.0));
            g.b.element(fig, "img", Rect::new(px, y, pw, 320.0));
            let caption = g.para_text(1);
            g.block(
                fig,
                "figcaption",
                Rect::new(px, y + 328.0, pw, 28.0),
                &caption,
            );
            y += 378.0;
        }
        if l.hidden_modal && k == 2 {
            let modal = g.b.element(main, "div", Rect::new(px, y, pw, 200.0));
            g.b.node_mut(modal).visible = false;
            g.block(
                modal,
                "p",
                Rect::new(px, y, pw, 60.0),
                "Subscribe to our newsletter",
            );
        }
    }
    // share bar inside the content
    let share = g.b.element(main, "div", Rect::new(px, y, pw, 40.0));
    g.b.class(share, "share");
    for (k, label) in ["Share", "Tweet", "Mail"].iter().enumerate() {
        g.anchor(
            share,
            Rect::new(px + k as f64 * 130.0, y, 120.0, 40.0),
            label,
        );
    }
    y += 60.0;

    if l.teasers {
        let more = g.b.element(main, "div", Rect::new(px, y, pw, 240.0));
        g.b.class(more, "more-stories");
        let tw = (pw - 40.0) / 3.0;
        for k in 0..3 {
            let r = Rect::new(px + k as f64 * (tw + 20.0), y, tw, 240.0);
            let teaser = g.b.element(more, "article", r);
            g.b.element(teaser, "img", Rect::new(r.x, r.y, r.w, 140.0));
            g.anchor(teaser, Rect::new(r.x, r.y + 150.0, r.w, 80.0), "Read more");
        }
        y += 260.0;
    }
    let main_bottom = y;
    g.b.node_mut(main).rect.h = main_bottom - top;

    let mut wrap_bottom = main_bottom;
    if has_sidebar {
        let (sx, sw) = match l.sidebar {
            Sidebar::Toc => (margin, inner_w * 0.25 - 30.0),
            _ => (
                col_x + col_w + 40.0,
                margin + inner_w - (col_x + col_w + 40.0),
            ),
        };
        let side_h = (main_bottom - top).min(1600.0);
        let aside =
            g.b.element(wrapper, "aside", Rect::new(sx, top, sw, side_h));
        g.b.class(aside, "sidebar");
        let mut sy = top;
        match l.sidebar {
            Sidebar::Related => {
                g.block(aside, "h3", Rect::new(sx, sy, sw, 36.0), "Related");
                sy += 36.0;
                let items = ((side_h - 36.0 - 260.0) / 72.0).floor().max(1.0) as usize;
                sy = g.link_list(aside, sx, sy, sw, items, 72.0);
                let ad = g.b.element(aside, "div", Rect::new(sx, sy, sw, 250.0));
                g.b.class(ad, "ad-slot");
                let a = g.b.element(ad, "a", Rect::new(sx, sy, sw, 250.0));
                g.b.node_mut(a).is_link = true;
                g.b.element(a, "img", Rect::new(sx, sy, sw, 250.0));
            }
            Sidebar::AdRail => {
                let slots = (side_h / 300.0).floor().max(1.0) as usize;
                for k in 0..slots {
                    let r = Rect::new(sx, sy + k as f64 * 300.0, sw, 290.0);
                    let a = g.b.element(aside, "a", r);
                    g.b.node_mut(a).is_link = true;
                    g.b.element(a, "img", r);
                }
            }
            Sidebar::Toc => {
                let items = ((side_h - 20.0) / 44.0).floor().clamp(1.0, 30.0) as usize;
                g.link_list(aside, sx, sy, sw, items, 44.0);
            }
            Sidebar::None => unreachable!(),
        }
        wrap_bottom = wrap_bottom.max(top + side_h);
    }
    g.b.node_mut(wrapper).rect.h = wrap_bottom - top;

    y = wrap_bottom + 40.0;
    if l.comments > 0 {
        let start = y;
        let comments = g.b.element(body, "div", Rect::new(col_x, y, col_w, 0.0));
        g.b.id_attr(comments, "comments");
        for _ in 0..l.comments {
            let lines = g.rng.gen_range(1..4);
            let h = lines as f64 * 26.0 + 40.0;
            let c = g.b.element(comments, "div", Rect::new(px, y, pw, h));
            g.b.class(c, "comment");
            g.anchor(c, Rect::new(px, y, 200.0, 30.0), "reader42");
            let text = g.para_text(lines);
            g.block(c, "p", Rect::new(px, y + 36.0, pw, h - 40.0), &text);
            y += h + 16.0;
        }
        g.b.node_mut(comments).rect.h = y - start;
        y += 40.0;
    }

    let footer = g.b.element(body, "footer", Rect::new(0.0, y, w, footer_h));
    let colw = (inner_w - 60.0) / 3.0;
    for k in 0..3 {
        g.link_list(
            footer,
            margin + k as f64 * (colw + 30.0),
            y + 20.0,
            colw,
            4,
            40.0,
        );
    }
    g.block(
        footer,
        "p",
        Rect::new(margin, y + 200.0, 600.0, 30.0),
        "© 2024 Daily Courier",
    );
    let doc_h = y + footer_h;

    if l.cookie_banner {
        let banner =
            g.b.element(body, "div", Rect::new(0.0, win.h - 120.0, w, 120.0));
        g.b.node_mut(banner).position_fixed = true;
        g.b.id_attr(banner, "cookie-consent");
        g.block(
            banner,
            "p",
            Rect::new(margin, win.h - 100.0, 900.0, 60.0),
            "We use cookies to improve your experience.",
        );
        g.anchor(
            banner,
            Rect::new(w - margin - 200.0, win.h - 90.0, 200.0, 50.0),
            "Accept",
        );
    }

    if l.rtl {
        for i in 1..g.b.len() {
            let r = &mut g.b.node_mut(NodeId(i as u32)).rect;
            r.x = w - r.x - r.w;
        }
    }
    g.b.set_document(Size::new(w, doc_h));
    let snapshot = g.b.build().expect("generated layout is valid");
    Fixture {
        name: l.name.to_string(),
        truth: GroundTruth {
            snapshot: l.name.to_string(),
            truth_node_id: main,
        },
        snapshot,
    }
}

/// The bundled evaluation corpus.
pub fn corpus_layouts() -> Vec<Layout> {
    use Marker::*;
    use Script::*;
    vec![
        Layout {
            comments: 6,
            ..Layout::new("en-news-article", English, Tag)
        },
        Layout::new("en-blog-entry-content", English, Class("entry-content")),
        Layout {
            sidebar: Sidebar::None,
            paragraphs: 14,
            ..Layout::new("en-centered-column", English, Width)
        },
        Layout {
            paragraphs: 48,
            comments: 20,
            ..Layout::new("en-long-read", English, Tag)
        },
        Layout {
            paragraphs: 2,
            figure: false,
            sidebar: Sidebar::None,
            ..Layout::new("en-short-notice", English, Class("post-content"))
        },
        Layout {
            cookie_banner: true,
            fixed_header: true,
            ..Layout::new("en-cookie-banner", English, Tag)
        },
        Layout {
            hidden_modal: true,
            ..Layout::new("en-hidden-modal", English, Id("main-content"))
        },
        Layout {
            sidebar: Sidebar::AdRail,
            ..Layout::new("en-ad-rail", English, Tag)
        },
        Layout::new("zh-news-short-menu", Chinese, Class("article-content")),
        Layout {
            paragraphs: 40,
            sidebar: Sidebar::AdRail,
            ..Layout::new("zh-portal-long", Chinese, Tag)
        },
        Layout {
            sidebar: Sidebar::None,
            ..Layout::new("ja-blog-column", Japanese, Width)
        },
        Layout::new("ko-news-article-body", Korean, Id("articleBody")),
        Layout {
            comments: 4,
            ..Layout::new("ar-news-rtl", Arabic, Tag)
        },
        Layout::new("ar-blog-rtl", Arabic, Class("post-content")),
        Layout {
            sidebar: Sidebar::None,
            paragraphs: 30,
            ..Layout::new("ar-long-column-rtl", Arabic, Width)
        },
        Layout {
            window: Size::new(1280.0, 1024.0),
            ..Layout::new("ru-news-1280", Russian, Tag)
        },
        Layout {
            window: Size::new(2560.0, 1440.0),
            ..Layout::new("fr-magazine-2560", French, Class("article-body"))
        },
        Layout {
            comments: 12,
            sidebar: Sidebar::None,
            ..Layout::new("id-forum-post", Indonesian, Class("post-content"))
        },
        Layout {
            sidebar: Sidebar::Toc,
            paragraphs: 18,
            ..Layout::new("en-docs-toc", English, Id("content"))
        },
        Layout {
            paragraphs: 2,
            figure: false,
            sidebar: Sidebar::None,
            ..Layout::new("ja-short-centered", Japanese, Width)
        },
        Layout {
            teasers: true,
            ..Layout::new("en-article-with-teasers", English, Tag)
        },
        Layout {
            rtl: true,
            ..Layout::new("en-rtl-mirrored", English, Class("story-content"))
        },
        Layout::new("en-legacy-wide-wrapper", English, WideWrapper),
        Layout {
            paragraphs: 5,
            comments: 45,
            ..Layout::new(
                "en-short-story-long-thread",
                English,
                Class("entry-content"),
            )
        },
        Layout {
            paragraphs: 60,
            comments: 10,
            sidebar: Sidebar::None,
            ..Layout::new("ko-very-long", Korean, Class("news-content"))
        },
    ]
}

pub fn corpus() -> Vec<Fixture> {
    corpus_layouts().iter().map(generate).collect()
}

pub fn load_corpus() -> Vec<Fixture> {
    let dir = fixtures_dir();
    let mut names: Vec<String> = std::fs::read_dir(dir.join("corpus"))
        .expect("fixture corpus present")
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            e.file_name()
                .to_str()
                .and_then(|n| n.strip_suffix(".json"))
                .map(str::to_owned)
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let snap = std::fs::read(dir.join("corpus").join(format!("{name}.json"))).unwrap();
            let truth = std::fs::read(dir.join("truth").join(format!("{name}.json"))).unwrap();
            Fixture {
                snapshot: PageSnapshot::from_json(&snap).unwrap(),
                truth: GroundTruth::from_json(&truth).unwrap(),
                name,
            }
        })
        .collect()
}

/// A 500-node page of nested sections used to check parsing against a
/// separately written manifest of ids and rects.
pub fn nodes_500() -> PageSnapshot {
    let mut b = SnapshotBuilder::new(Size::new(1920.0, 1080.0), Size::new(1920.0, 12_000.0));
    let body = b.root();
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut y = 0.0;
    while b.len() < 500 {
        let section = b.element(body, "section", Rect::new(100.0, y, 1700.0, 110.0));
        let mut x = 100.0;
        while b.len() < 500 && x < 1600.0 {
            let w = rng.gen_range(60..200) as f64;
            let div = b.element(section, "div", Rect::new(x, y + 10.0, w, 90.0));
            if b.len() < 500 {
                b.text(div, Rect::new(x + 4.0, y + 14.0, w - 8.0, 20.0), "cell");
            }
            x += w + 10.0;
        }
        y += 120.0;
    }
    b.build().unwrap()
}

/// 200 nodes of which 40 sit in three fixed subtrees (13 + 13 + 14).
pub fn fixed_200() -> PageSnapshot {
    let mut b = SnapshotBuilder::new(Size::new(1920.0, 1080.0), Size::new(1920.0, 4000.0));
    let body = b.root();
    let fixed_block = |b: &mut SnapshotBuilder, y: f64, size: usize| {
        let root = b.element(body, "div", Rect::new(0.0, y, 1920.0, 80.0));
        b.node_mut(root).position_fixed = true;
        let mut k = 1;
        while k < size {
            let inner = b.element(root, "span", Rect::new(10.0 * k as f64, y, 10.0, 40.0));
            k += 1;
            if k < size {
                b.text(inner, Rect::new(10.0 * k as f64, y, 8.0, 20.0), "x");
                k += 1;
            }
        }
    };
    fixed_block(&mut b, 0.0, 13);
    let main = b.element(body, "main", Rect::new(200.0, 100.0, 1200.0, 3000.0));
    for k in 0..79 {
        let p = b.element(
            main,
            "p",
            Rect::new(220.0, 120.0 + 36.0 * k as f64, 1100.0, 30.0),
        );
        b.text(
            p,
            Rect::new(220.0, 120.0 + 36.0 * k as f64, 1100.0, 30.0),
            "paragraph",
        );
    }
    fixed_block(&mut b, 1000.0, 13);
    fixed_block(&mut b, 1000.0, 14);
    assert_eq!(b.len(), 200);
    b.build().unwrap()
}

/// Top menu plus a right ad rail on a 3000 px document at 1920×1080.
pub fn ad_rail_page() -> PageSnapshot {
    let mut b = SnapshotBuilder::new(Size::new(1920.0, 1080.0), Size::new(1920.0, 3000.0));
    let body = b.root();
    let nav = b.element(body, "nav", Rect::new(0.0, 0.0, 1920.0, 240.0));
    let ul = b.element(nav, "ul", Rect::new(0.0, 0.0, 1920.0, 240.0));
    for k in 0..8 {
        let r = Rect::new(240.0 * k as f64, 0.0, 240.0, 240.0);
        let li = b.element(ul, "li", r);
        b.link(li, r, "Section");
    }
    let main = b.element(body, "main", Rect::new(240.0, 260.0, 1140.0, 2400.0));
    for k in 0..20 {
        let r = Rect::new(260.0, 280.0 + 110.0 * k as f64, 1100.0, 90.0);
        let p = b.element(main, "p", r);
        b.text(p, r, "Body text of the story.");
    }
    let aside = b.element(body, "aside", Rect::new(1440.0, 240.0, 480.0, 1460.0));
    for k in 0..10 {
        let r = Rect::new(1440.0, 240.0 + 146.0 * k as f64, 480.0, 146.0);
        let a = b.element(aside, "a", r);
        b.node_mut(a).is_link = true;
        b.element(a, "img", r);
    }
    b.build().unwrap()
}

/// 14 menu links over 37 article paragraphs.
pub fn labeled_page() -> PageSnapshot {
    let mut b = SnapshotBuilder::new(Size::new(1920.0, 1080.0), Size::new(1920.0, 3200.0));
    let body = b.root();
    let header = b.element(body, "header", Rect::new(0.0, 0.0, 1920.0, 80.0));
    let ul = b.element(header, "ul", Rect::new(100.0, 10.0, 1720.0, 60.0));
    for k in 0..14 {
        let r = Rect::new(100.0 + 120.0 * k as f64, 10.0, 120.0, 60.0);
        let li = b.element(ul, "li", r);
        b.link(li, r, "Menu");
    }
    let article = b.element(
        body,
        "article",
        Rect::new(300.0, 100.0, 1200.0, 37.0 * 80.0),
    );
    for k in 0..37 {
        let r = Rect::new(320.0, 110.0 + 80.0 * k as f64, 1160.0, 60.0);
        let p = b.element(article, "p", r);
        b.text(p, r, "Article paragraph.");
    }
    b.build().unwrap()
}

pub struct SelectionCase {
    pub name: &'static str,
    pub snapshot: PageSnapshot,
    pub sets: Vec<gce_core::CandidateSet>,
    pub expected: Option<NodeId>,
}

/// Candidate sets crafted so that each slot of the default order is the
/// first one present, plus one where every candidate is the body.
pub fn selection_cases() -> Vec<SelectionCase> {
    let mut b = SnapshotBuilder::new(Size::new(1920.0, 1080.0), Size::new(1920.0, 4000.0));
    let body = b.root();
    let mut tall = Vec::new();
    let mut short = Vec::new();
    for k in 0..3 {
        let x = 100.0 + 600.0 * k as f64;
        let t = b.element(body, "div", Rect::new(x, 100.0, 500.0, 1200.0));
        b.text(t, Rect::new(x, 100.0, 500.0, 400.0), "tall");
        tall.push(t);
        let s = b.element(body, "div", Rect::new(x, 2000.0, 500.0, 200.0));
        b.text(s, Rect::new(x, 2000.0, 500.0, 100.0), "short");
        short.push(s);
    }
    let snapshot = b.build().unwrap();
    let seed = NodeId(2);
    let set = |center: u8, node: Option<NodeId>| gce_core::CandidateSet {
        center_index: center,
        seed,
        m_tag: node,
        m_attr: None,
        m_diff: None,
    };
    let case = |name, c3, c2, c1, expected| SelectionCase {
        name,
        snapshot: snapshot.clone(),
        sets: vec![set(1, c1), set(2, c2), set(3, c3)],
        expected,
    };
    let (t, s, body) = (
        |i: usize| Some(tall[i]),
        |i: usize| Some(short[i]),
        Some(body),
    );
    vec![
        case("3best", t(2), t(1), t(0), t(2)),
        case("2best", s(2), t(1), t(0), t(1)),
        case("1best", s(2), s(1), t(0), t(0)),
        case("3nobest", s(2), s(1), s(0), s(2)),
        case("2nobest", body, s(1), s(0), s(1)),
        case("1nobest", body, None, s(0), s(0)),
        case("all-body", body, body, body, None),
    ]
}

/// Random element/text tree with nested boxes, single-child link chains and
/// overlapping siblings. Every box has positive area.
pub fn random_tree(rng: &mut ChaCha8Rng) -> PageSnapshot {
    let window = Size::new(1920.0, 1080.0);
    let doc_h = rng.gen_range(800..6000) as f64;
    let mut b = SnapshotBuilder::new(window, Size::new(1920.0, doc_h));
    let mut elements = vec![(b.root(), Rect::new(0.0, 0.0, 1920.0, doc_h))];
    let n = rng.gen_range(10..150);
    for _ in 0..n {
        let (parent, pr) = elements[rng.gen_range(0..elements.len())];
        let w = rng.gen_range(0.2..=1.0) * pr.w;
        let h = rng.gen_range(0.1..=1.0) * pr.h;
        let r = Rect::new(
            pr.x + rng.gen_range(0.0..=1.0) * (pr.w - w),
            pr.y + rng.gen_range(0.0..=1.0) * (pr.h - h),
            w.max(1.0),
            h.max(1.0),
        );
        match rng.gen_range(0..10) {
            0..=2 => {
                b.text(parent, r, "t");
            }
            3..=4 => {
                let a = b.element(parent, "a", r);
                b.node_mut(a).is_link = true;
                if rng.gen_bool(0.7) {
                    b.text(a, r, "link");
                }
            }
            5 => {
                // wrapper chain ending in a link
                let depth = rng.gen_range(1..4);
                let mut p = parent;
                for _ in 0..depth {
                    p = b.element(p, "div", r);
                }
                let a = b.element(p, "a", r);
                b.text(a, r, "nested");
            }
            _ => {
                let tag = ["div", "section", "p", "li", "span"][rng.gen_range(0..5)];
                let e = b.element(parent, tag, r);
                elements.push((e, r));
            }
        }
    }
    b.build().unwrap()
}
