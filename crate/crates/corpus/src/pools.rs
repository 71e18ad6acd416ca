//! Vocabulary the generator draws from. Every skill, degree, header and
//! language surface here is one the bundled parser lexicons know.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lang {
    En,
    Fr,
}

impl Lang {
    pub fn code(self) -> &'static str {
        match self {
            Lang::En => "en",
            Lang::Fr => "fr",
        }
    }
}

pub const GIVEN: &[&str] = &[
    "Amine", "Yacine", "Karim", "Sofiane", "Walid", "Mehdi", "Riad", "Nassim", "Bilal", "Hamza", "Anis", "Samir",
    "Lina", "Sara", "Nadia", "Amina", "Meriem", "Yasmine", "Imane", "Samia", "Lamia", "Rania", "Ines", "Kenza",
    "Thomas", "Julien", "Camille", "Claire", "David", "Emma", "Lucas", "Sophie",
];

pub const FAMILY: &[&str] = &[
    "Benali",
    "Haddad",
    "Mansouri",
    "Bouzid",
    "Cherif",
    "Belkacem",
    "Saidi",
    "Hamdi",
    "Brahimi",
    "Meziane",
    "Boudiaf",
    "Khelifi",
    "Amrani",
    "Toumi",
    "Zerrouki",
    "Benaissa",
    "Kaci",
    "Rahmani",
    "Ait-Ahmed",
    "Ferhat",
    "Martin",
    "Bernard",
    "Dubois",
    "Moreau",
    "Laurent",
    "Smith",
    "Johnson",
    "Brown",
];

pub const MAIL_DOMAINS: &[&str] = &["gmail.com", "yahoo.fr", "outlook.com", "hotmail.fr", "esi.dz", "usthb.dz"];

/// (street line, city)
pub const STREETS: &[&str] = &[
    "12 Rue Didouche Mourad",
    "5 Avenue de l'ALN",
    "Cité 500 Logements",
    "8 Boulevard Zighoud Youcef",
    "Lotissement 45 N° 12",
    "3 Rue Larbi Ben M'hidi",
    "27 Rue Victor Hugo",
    "14 Avenue Pasteur",
];

pub const CITIES: &[&str] = &["Alger", "Oran", "Constantine", "Annaba", "Blida", "Sétif", "Tlemcen", "Béjaïa"];

pub const COMPANIES: &[&str] = &[
    "Sonatrach",
    "Djezzy",
    "Mobilis",
    "Ooredoo",
    "Condor Electronics",
    "Yassir",
    "Cevital",
    "CNEP Banque",
    "Air Algérie",
    "Algérie Télécom",
    "Capgemini",
    "Atos",
    "Sopra Steria",
    "Orange Business",
    "Thales",
];

/// (id, canonical, French surface or "" when it is the same)
pub const SKILLS: &[(&str, &str, &str)] = &[
    ("python", "Python", ""),
    ("java", "Java", ""),
    ("javascript", "JavaScript", ""),
    ("typescript", "TypeScript", ""),
    ("cpp", "C++", ""),
    ("csharp", "C#", ""),
    ("php", "PHP", ""),
    ("kotlin", "Kotlin", ""),
    ("sql", "SQL", ""),
    ("html", "HTML", ""),
    ("css", "CSS", ""),
    ("react", "React", ""),
    ("angular", "Angular", ""),
    ("nodejs", "Node.js", ""),
    ("django", "Django", ""),
    ("flask", "Flask", ""),
    ("spring", "Spring Boot", ""),
    ("laravel", "Laravel", ""),
    ("flutter", "Flutter", ""),
    ("postgresql", "PostgreSQL", ""),
    ("mysql", "MySQL", ""),
    ("mongodb", "MongoDB", ""),
    ("redis", "Redis", ""),
    ("git", "Git", ""),
    ("docker", "Docker", ""),
    ("kubernetes", "Kubernetes", ""),
    ("jenkins", "Jenkins", ""),
    ("ci-cd", "CI/CD", "Intégration continue"),
    ("aws", "AWS", ""),
    ("azure", "Azure", ""),
    ("linux", "Linux", ""),
    ("ubuntu", "Ubuntu", ""),
    ("nginx", "Nginx", ""),
    ("rest-api", "REST API", "API REST"),
    ("microservices", "Microservices", ""),
    ("kafka", "Kafka", ""),
    ("machine-learning", "Machine Learning", "Apprentissage automatique"),
    ("deep-learning", "Deep Learning", "Apprentissage profond"),
    ("computer-vision", "Computer Vision", "Vision par ordinateur"),
    ("data-analysis", "Data Analysis", "Analyse de données"),
    ("data-visualization", "Data Visualization", "Visualisation de données"),
    ("statistics", "Statistics", "Statistiques"),
    ("tensorflow", "TensorFlow", ""),
    ("pytorch", "PyTorch", ""),
    ("pandas", "Pandas", ""),
    ("power-bi", "Power BI", ""),
    ("excel", "Excel", ""),
    ("networking", "Computer Networking", "Réseaux informatiques"),
    ("cisco", "Cisco", ""),
    ("ccna", "CCNA", ""),
    ("telecommunications", "Telecommunications", "Télécommunications"),
    ("network-security", "Network Security", "Sécurité réseau"),
    ("cybersecurity", "Cybersecurity", "Cybersécurité"),
    ("vmware", "VMware", ""),
    ("uml", "UML", ""),
    ("agile", "Agile", "Méthodes agiles"),
    ("scrum", "Scrum", ""),
    ("jira", "Jira", ""),
    ("project-management", "Project Management", "Gestion de projet"),
    ("unit-testing", "Unit Testing", "Tests unitaires"),
    ("figma", "Figma", ""),
    ("software-engineering", "Software Engineering", "Génie logiciel"),
    ("embedded-systems", "Embedded Systems", "Systèmes embarqués"),
    ("teamwork", "Teamwork", "Travail en équipe"),
    ("leadership", "Leadership", ""),
    ("problem-solving", "Problem Solving", "Résolution de problèmes"),
];

/// Alternative spellings a resume may use instead of the canonical name.
pub const ALIASES: &[(&str, &str)] = &[
    ("javascript", "JS"),
    ("kubernetes", "K8s"),
    ("nodejs", "NodeJS"),
    ("react", "ReactJS"),
    ("postgresql", "Postgres"),
    ("data-analysis", "data analytics"),
    ("machine-learning", "ML"),
];

pub fn skill(id: &str) -> (&'static str, &'static str, &'static str) {
    *SKILLS.iter().find(|s| s.0 == id).unwrap_or_else(|| panic!("unknown skill {id}"))
}

pub const SKILL_PREFIXES: &[(Lang, &str)] =
    &[(Lang::En, "Tools: "), (Lang::En, "Frameworks: "), (Lang::Fr, "Outils : "), (Lang::Fr, "Frameworks : ")];

pub struct Headers {
    pub contact: &'static [&'static str],
    pub summary: &'static [&'static str],
    pub experience: &'static [&'static str],
    pub education: &'static [&'static str],
    pub skills: &'static [&'static str],
    pub languages: &'static [&'static str],
    pub other: &'static [&'static str],
}

pub const EN_HEADERS: Headers = Headers {
    contact: &["Contact", "Personal Details"],
    summary: &["Summary", "Professional Summary", "About Me"],
    experience: &["Experience", "Professional Experience", "Work History"],
    education: &["Education", "Academic Background"],
    skills: &["Skills", "Technical Skills", "Core Competencies"],
    languages: &["Languages"],
    other: &["Interests", "Hobbies"],
};

pub const FR_HEADERS: Headers = Headers {
    contact: &["Contact", "Coordonnées", "Informations personnelles"],
    summary: &["Résumé professionnel", "Objectif professionnel", "À propos de moi"],
    experience: &["Expérience professionnelle", "Parcours professionnel", "Expériences"],
    education: &["Formation", "Études", "Formation académique", "Diplômes"],
    skills: &["Compétences", "Compétences techniques", "Savoir-faire"],
    languages: &["Langues", "Langues parlées"],
    other: &["Centres d'intérêt", "Loisirs"],
};

pub fn headers(lang: Lang) -> &'static Headers {
    match lang {
        Lang::En => &EN_HEADERS,
        Lang::Fr => &FR_HEADERS,
    }
}

/// (ordinal, English forms, French forms); `{}` is the field of study.
pub const DEGREES: &[(u8, &[&str], &[&str])] = &[
    (1, &["High School Diploma, {}"], &["Baccalauréat série {}"]),
    (2, &["Bachelor of Science in {}", "BSc in {}"], &["Licence en {}", "Licence professionnelle en {}"]),
    (
        3,
        &["Master of Science in {}", "MSc in {}", "Engineering degree in {}"],
        &["Master en {}", "Diplôme d'ingénieur d'État en {}"],
    ),
    (4, &["PhD in {}"], &["Doctorat en {}"]),
];

pub const FIELDS_EN: &[&str] = &["Computer Science", "Information Systems", "Networks", "Mathematics", "Electronics"];
pub const FIELDS_FR: &[&str] =
    &["Informatique", "Systèmes d'information", "Réseaux et Télécoms", "Mathématiques", "Électronique"];
pub const HIGHSCHOOL_FIELDS: &[&str] = &["Sciences", "Mathématiques", "Techniques"];

pub const SCHOOLS: &[&str] = &[
    "USTHB",
    "ESI Alger",
    "Université d'Oran 1",
    "Université de Constantine 2",
    "ENP Alger",
    "Université de Béjaïa",
    "INSA Lyon",
    "Université Paris-Saclay",
];

pub const ROLES_EN: &[&str] = &[
    "Backend Developer",
    "Full Stack Developer",
    "Data Analyst",
    "DevOps Engineer",
    "Network Administrator",
    "Mobile Developer",
    "Data Scientist",
    "Software Developer",
    "IT Support Technician",
    "QA Tester",
];

pub const ROLES_FR: &[&str] = &[
    "Développeur Backend",
    "Développeur Full Stack",
    "Analyste de données",
    "Administrateur réseaux",
    "Développeur mobile",
    "Chef de projet junior",
    "Technicien support",
    "Développeur web",
    "Stagiaire développeur",
];

pub const TASKS_EN: &[&str] = &[
    "Built and maintained internal web services.",
    "Designed dashboards for the sales team.",
    "Automated deployments and monitoring.",
    "Worked in an agile team of six engineers.",
    "Improved query performance on reporting databases.",
];

pub const TASKS_FR: &[&str] = &[
    "Conception et maintenance de services web internes.",
    "Mise en place de tableaux de bord pour la direction.",
    "Automatisation des déploiements et de la supervision.",
    "Travail au sein d'une équipe de six ingénieurs.",
    "Optimisation des requêtes sur les bases de reporting.",
];

pub const SUMMARIES_EN: &[&str] = &[
    "Motivated engineer who enjoys building reliable software.",
    "Analytical profile, curious and rigorous.",
    "Looking for a challenging position in a dynamic team.",
];

pub const SUMMARIES_FR: &[&str] = &[
    "Ingénieur motivé, rigoureux et curieux.",
    "Passionné par le développement de solutions fiables.",
    "À la recherche d'un poste stimulant au sein d'une équipe dynamique.",
];

pub const INTERESTS_EN: &[&str] = &["Chess, hiking, photography", "Football, reading, volunteering"];
pub const INTERESTS_FR: &[&str] = &["Échecs, randonnée, photographie", "Football, lecture, bénévolat"];

/// (code, English name, French name)
pub const LANGUAGES: &[(&str, &str, &str)] = &[
    ("ar", "Arabic", "Arabe"),
    ("fr", "French", "Français"),
    ("en", "English", "Anglais"),
    ("ber", "Tamazight", "Tamazight"),
    ("es", "Spanish", "Espagnol"),
    ("de", "German", "Allemand"),
];

pub const LEVELS_EN: &[&str] = &["native", "fluent", "professional", "B2", "intermediate"];
pub const LEVELS_FR: &[&str] = &["langue maternelle", "courant", "bilingue", "B2", "intermédiaire"];

pub const MONTHS_EN: &[&str] = &["Jan", "Feb", "Mar", "Apr", "May", "Jun", "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"];
pub const MONTHS_EN_LONG: &[&str] = &[
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];
pub const MONTHS_FR: &[&str] =
    &["janv.", "févr.", "mars", "avr.", "mai", "juin", "juil.", "août", "sept.", "oct.", "nov.", "déc."];
pub const MONTHS_FR_LONG: &[&str] = &[
    "Janvier",
    "Février",
    "Mars",
    "Avril",
    "Mai",
    "Juin",
    "Juillet",
    "Août",
    "Septembre",
    "Octobre",
    "Novembre",
    "Décembre",
];
